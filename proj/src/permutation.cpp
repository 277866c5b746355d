#include "classprod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>

#include "classprod/errors.hpp"

namespace classprod {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw DomainError("a permutation needs degree at least 1");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("images do not form a bijection of {1.." + std::to_string(n) + "}");
    }
    seen[static_cast<std::size_t>(v - 1)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(n);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int x = cycle[i];
      if (x < 1 || x > n) {
        throw DomainError("point " + std::to_string(x) + " outside {1.." + std::to_string(n) + "}");
      }
      if (seen[static_cast<std::size_t>(x - 1)]) {
        throw DomainError("point " + std::to_string(x) + " appears in more than one cycle");
      }
      seen[static_cast<std::size_t>(x - 1)] = 1;
      p.images_[static_cast<std::size_t>(x - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, int n) {
  auto skip_space = [&](std::size_t& i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::size_t i = 0;
  skip_space(i);
  if (text.substr(i) == "e") return identity(n);

  std::vector<std::vector<int>> cycles;
  while (true) {
    skip_space(i);
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '(' in '" + std::string(text) + "'");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space(i);
      if (i == text.size()) throw ParseError("unterminated cycle in '" + std::string(text) + "'");
      if (text[i] == ')') {
        ++i;
        break;
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("expected a point in '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  try {
    return from_cycles(n, cycles);
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<int> Permutation::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i) + 1) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int Permutation::fixed_point_count() const noexcept {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) count += images_[i] == static_cast<int>(i) + 1;
  return count;
}

std::string Permutation::to_string() const {
  std::string out;
  for (const auto& cycle : cycle_decomposition(*this)) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

namespace {

void require_same_degree(const Permutation& a, const Permutation& b, const char* op) {
  if (a.n() != b.n()) {
    throw DomainError(std::string(op) + ": degrees differ (" + std::to_string(a.n()) + " vs " +
                      std::to_string(b.n()) + ")");
  }
}

}  // namespace

Permutation compose(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "compose");
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) images[static_cast<std::size_t>(i - 1)] = a(b(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) images[static_cast<std::size_t>(a(i) - 1)] = i;
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  require_same_degree(a, g, "conjugate");
  // g^{-1} a g maps g^{-1}(x) to g^{-1}(a(x)).
  const Permutation g_inv = inverse(g);
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int x = 1; x <= a.n(); ++x) images[static_cast<std::size_t>(g_inv(x) - 1)] = g_inv(a(x));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> cycle_decomposition(const Permutation& a) {
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(static_cast<std::size_t>(a.n()), 0);
  for (int start = 1; start <= a.n(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[static_cast<std::size_t>(x - 1)]; x = a(x)) {
      seen[static_cast<std::size_t>(x - 1)] = 1;
      cycle.push_back(x);
    }
    cycles.push_back(std::move(cycle));
  }
  // Cycles were opened at their minimum in increasing order, so a stable sort
  // by length keeps ties ordered by minimum.
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& x, const auto& y) { return x.size() > y.size(); });
  return cycles;
}

CycleType cycle_type(std::span<const int> images, std::vector<char>& scratch) {
  scratch.assign(images.size(), 0);
  std::vector<int> parts;
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (scratch[start]) continue;
    int len = 0;
    for (std::size_t x = start; !scratch[x]; x = static_cast<std::size_t>(images[x] - 1)) {
      scratch[x] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

CycleType cycle_type(const Permutation& a) {
  std::vector<char> scratch;
  return cycle_type(a.images(), scratch);
}

Permutation canonical_rep(const CycleType& t) {
  std::vector<int> images(static_cast<std::size_t>(t.n()));
  int first = 1;
  for (int part : t.parts()) {
    for (int k = 0; k < part; ++k) {
      images[static_cast<std::size_t>(first + k - 1)] = first + (k + 1) % part;
    }
    first += part;
  }
  return Permutation(std::move(images));
}

Permutation conjugator_between(const Permutation& a, const Permutation& b) {
  require_same_degree(a, b, "conjugator_between");
  auto ca = cycle_decomposition(a);
  auto cb = cycle_decomposition(b);
  bool same_type = ca.size() == cb.size();
  for (std::size_t i = 0; same_type && i < ca.size(); ++i) same_type = ca[i].size() == cb[i].size();
  if (!same_type) {
    throw DomainError("conjugator_between: cycle types differ (" + cycle_type(a).to_string() +
                      " vs " + cycle_type(b).to_string() + ")");
  }
  // a^g relabels the cycles of a through g^{-1}, so g sends b's cycles onto a's.
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    for (std::size_t j = 0; j < ca[i].size(); ++j) {
      images[static_cast<std::size_t>(cb[i][j] - 1)] = ca[i][j];
    }
  }
  return Permutation(std::move(images));
}

Permutation embed(const Permutation& a, int n) {
  if (n < a.n()) {
    throw DomainError("embed: target degree " + std::to_string(n) + " below " + std::to_string(a.n()));
  }
  std::vector<int> images(a.images().begin(), a.images().end());
  for (int i = a.n() + 1; i <= n; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

Permutation restrict_to(const Permutation& a, int m) {
  if (m < 1 || m > a.n()) throw DomainError("restrict_to: bad degree " + std::to_string(m));
  for (int i = m + 1; i <= a.n(); ++i) {
    if (a(i) != i) throw DomainError("restrict_to: point " + std::to_string(i) + " is moved");
  }
  return Permutation(std::vector<int>(a.images().begin(), a.images().begin() + m));
}

Permutation transposition(int n, int i, int j) {
  if (i == j) throw DomainError("transposition needs two distinct points");
  return Permutation::from_cycles(n, {{i, j}});
}

std::optional<Permutation> extend_partial(const CycleType& t,
                                          std::span<const std::pair<int, int>> arrows) {
  const int n = t.n();
  std::vector<int> next(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> prev(static_cast<std::size_t>(n + 1), 0);
  for (auto [x, y] : arrows) {
    if (x < 1 || x > n || y < 1 || y > n) throw DomainError("extend_partial: point out of range");
    auto& nx = next[static_cast<std::size_t>(x)];
    auto& py = prev[static_cast<std::size_t>(y)];
    if ((nx && nx != y) || (py && py != x)) return std::nullopt;
    nx = y;
    py = x;
  }

  std::vector<int> parts(t.parts().begin(), t.parts().end());
  std::vector<std::vector<int>> chains;
  std::vector<std::vector<int>> closed;
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  for (int x = 1; x <= n; ++x) {
    if (seen[static_cast<std::size_t>(x)] || !next[static_cast<std::size_t>(x)] ||
        prev[static_cast<std::size_t>(x)]) {
      continue;
    }
    std::vector<int> chain;
    for (int p = x; p; p = next[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      chain.push_back(p);
    }
    chains.push_back(std::move(chain));
  }
  for (int x = 1; x <= n; ++x) {
    if (seen[static_cast<std::size_t>(x)] || !next[static_cast<std::size_t>(x)]) continue;
    std::vector<int> cycle;
    for (int p = x; !seen[static_cast<std::size_t>(p)]; p = next[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      cycle.push_back(p);
    }
    auto it = std::find(parts.begin(), parts.end(), static_cast<int>(cycle.size()));
    if (it == parts.end()) return std::nullopt;
    parts.erase(it);
    closed.push_back(std::move(cycle));
  }

  // Pack the open chains into the remaining cycles, longest chain first.
  std::sort(chains.begin(), chains.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> capacity = parts;
  std::vector<std::size_t> slot_of(chains.size());
  std::function<bool(std::size_t)> pack = [&](std::size_t c) {
    if (c == chains.size()) return true;
    const int need = static_cast<int>(chains[c].size());
    for (std::size_t s = 0; s < capacity.size(); ++s) {
      if (capacity[s] < need) continue;
      // Slots with identical state are interchangeable.
      bool duplicate = false;
      for (std::size_t r = 0; r < s && !duplicate; ++r) {
        duplicate = capacity[r] == capacity[s] && parts[r] == parts[s];
      }
      if (duplicate) continue;
      capacity[s] -= need;
      slot_of[c] = s;
      if (pack(c + 1)) return true;
      capacity[s] += need;
    }
    return false;
  };
  if (!pack(0)) return std::nullopt;

  std::vector<int> free_points;
  for (int x = 1; x <= n; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) free_points.push_back(x);
  }
  std::size_t next_free = 0;
  std::vector<std::vector<int>> cycles = std::move(closed);
  for (std::size_t s = 0; s < parts.size(); ++s) {
    std::vector<int> cycle;
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (slot_of[c] == s) cycle.insert(cycle.end(), chains[c].begin(), chains[c].end());
    }
    while (static_cast<int>(cycle.size()) < parts[s]) cycle.push_back(free_points[next_free++]);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace classprod
