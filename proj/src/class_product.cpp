#include <algorithm>

#include "classprod/class_algebra.hpp"
#include "classprod/errors.hpp"
#include "classprod/permutation.hpp"

namespace classprod {

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::brute: return "brute";
    case Engine::character: return "character";
    case Engine::automatic: return "auto";
  }
  return "auto";
}

Engine parse_engine(const std::string& text) {
  if (text == "brute") return Engine::brute;
  if (text == "character") return Engine::character;
  if (text == "auto") return Engine::automatic;
  throw ParseError("unknown engine '" + text + "' (expected brute, character or auto)");
}

namespace {

void require_same_n(const CycleType& a, const CycleType& b) {
  if (a.n() != b.n()) {
    throw DomainError("class product of partitions of different n (" + a.to_string() + " vs " +
                      b.to_string() + ")");
  }
}

}  // namespace

ClassProduct product_types_bruteforce(const CycleType& lhs, const CycleType& rhs,
                                      const Limits& limits) {
  require_same_n(lhs, rhs);
  // Every product class is met by rep * y with rep fixed, since (x y)^h has
  // x^h = rep for a suitable h. The structure constants are symmetric, so
  // the smaller class is the one enumerated.
  const BigInt size_lhs = class_size(lhs);
  const BigInt size_rhs = class_size(rhs);
  const bool swap = size_lhs < size_rhs;
  const CycleType& fixed = swap ? rhs : lhs;
  const CycleType& walked = swap ? lhs : rhs;
  const BigInt& fixed_size = swap ? size_rhs : size_lhs;

  const Permutation rep = canonical_rep(fixed);
  const auto rep_images = rep.images();
  ClassStream stream(walked, limits);
  std::map<CycleType, std::uint64_t, std::greater<>> counts;
  std::vector<int> product(rep_images.size());
  std::vector<char> scratch;
  while (stream.advance()) {
    const auto y = stream.current_images();
    for (std::size_t i = 0; i < y.size(); ++i) {
      product[i] = rep_images[static_cast<std::size_t>(y[i] - 1)];
    }
    ++counts[cycle_type(product, scratch)];
  }

  // #{y : rep * y in C_nu} = a_nu |C_nu| / |C_fixed|
  ClassProduct out{lhs, rhs, {}};
  for (const auto& [nu, count] : counts) {
    const BigInt scaled = BigInt(count) * fixed_size;
    const BigInt nu_size = class_size(nu);
    if (scaled % nu_size != 0) {
      throw InvariantViolation("brute-force count for " + nu.to_string() + " is not a multiple of the class size");
    }
    out.components.emplace(nu, scaled / nu_size);
  }
  return out;
}

ClassProduct product_types_character(const CycleType& lhs, const CycleType& rhs,
                                     const Limits& limits) {
  require_same_n(lhs, rhs);
  const auto table = character_table(lhs.n(), limits);
  const int x = table->index_of(lhs);
  const int y = table->index_of(rhs);
  const BigInt scale = table->class_size(x) * table->class_size(y);
  const BigInt denominator = table->group_order() * table->group_order();
  const int sign = lhs.sign() * rhs.sign();

  ClassProduct out{lhs, rhs, {}};
  for (int z = 0; z < table->size(); ++z) {
    const CycleType& nu = table->partitions()[static_cast<std::size_t>(z)];
    // Products of x and y all have sign sign(x) sign(y).
    if (nu.sign() != sign) continue;
    const BigInt numerator = scale * table->weighted_triple_sum(x, y, z);
    if (numerator < 0 || numerator % denominator != 0) {
      throw InvariantViolation("structure constant for (" + lhs.to_string() + ", " +
                               rhs.to_string() + ", " + nu.to_string() +
                               ") is not a non-negative integer");
    }
    if (numerator != 0) out.components.emplace(nu, numerator / denominator);
  }
  return out;
}

ClassProduct eta(const CycleType& lhs, const CycleType& rhs, Engine engine, const Limits& limits) {
  if (engine == Engine::automatic) {
    const BigInt smaller = std::min(class_size(lhs), class_size(rhs));
    engine = smaller <= limits.auto_bruteforce_threshold ? Engine::brute : Engine::character;
  }
  ClassProduct out = engine == Engine::brute ? product_types_bruteforce(lhs, rhs, limits)
                                             : product_types_character(lhs, rhs, limits);
  if (out.components.empty()) throw InvariantViolation("empty class product");
  return out;
}

std::vector<ClassProduct> eta_table(int n, Engine engine, const Limits& limits) {
  const auto types = partitions_of(n, limits);
  std::vector<ClassProduct> out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (types[i].is_identity()) continue;
    for (std::size_t j = i; j < types.size(); ++j) {
      if (types[j].is_identity()) continue;
      out.push_back(eta(types[i], types[j], engine, limits));
    }
  }
  return out;
}

MinEta min_eta(const std::vector<ClassProduct>& table) {
  MinEta out;
  for (const auto& product : table) {
    const int value = product.eta();
    if (out.minimum == 0 || value < out.minimum) {
      out.minimum = value;
      out.achievers.clear();
    }
    if (value == out.minimum) out.achievers.push_back(make_type_pair(product.lhs, product.rhs));
  }
  std::sort(out.achievers.begin(), out.achievers.end());
  return out;
}

MinEta min_eta(int n, Engine engine, const Limits& limits) {
  if (n < 2) throw DomainError("min_eta: S_n has no non-identity classes for n < 2");
  return min_eta(eta_table(n, engine, limits));
}

int even_class_count(int n, const Limits& limits) {
  const auto types = partitions_of(n, limits);
  return static_cast<int>(std::count_if(types.begin(), types.end(),
                                        [](const CycleType& t) { return t.sign() == 1; }));
}

nlohmann::json to_json(const ClassProduct& product) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& [nu, multiplicity] : product.components) {
    components.push_back({{"type", nu.to_string()}, {"multiplicity", multiplicity.str()}});
  }
  return {{"n", product.n()},
          {"lhs", product.lhs.to_string()},
          {"rhs", product.rhs.to_string()},
          {"eta", product.eta()},
          {"components", std::move(components)}};
}

ClassProduct class_product_from_json(const nlohmann::json& j) {
  ClassProduct out{CycleType::parse(j.at("lhs").get<std::string>()),
                   CycleType::parse(j.at("rhs").get<std::string>()),
                   {}};
  for (const auto& c : j.at("components")) {
    out.components.emplace(CycleType::parse(c.at("type").get<std::string>()),
                           BigInt(c.at("multiplicity").get<std::string>()));
  }
  if (out.eta() != j.at("eta").get<int>() || out.n() != j.at("n").get<int>()) {
    throw ParseError("class product JSON is inconsistent");
  }
  return out;
}

}  // namespace classprod
