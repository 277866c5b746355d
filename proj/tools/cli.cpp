#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "classprod/class_algebra.hpp"
#include "classprod/constructive.hpp"
#include "classprod/errors.hpp"
#include "classprod/partitions.hpp"
#include "classprod/permutation.hpp"
#include "classprod/verification.hpp"

namespace classprod::cli {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when verification finishes with a failing report.
struct VerificationFailed {};

struct RunConfig {
  std::string format;
  std::string output_path;
  std::string engine = "auto";
  std::uint64_t seed = 0;
  int n = 0;
  std::string lhs, rhs;
  std::string statement = "all";
  int n_from = 0, n_to = 0;
  int trials = 200;
  bool timing = false;
  int lemma = 0;
  int m = 0;
  std::string alpha, beta;
  std::string cache_dir;
};

std::string quote(const std::string& field) { return "\"" + field + "\""; }

std::string components_field(const ClassProduct& p) {
  std::string out;
  for (const auto& [nu, mult] : p.components) {
    if (!out.empty()) out += ';';
    out += nu.to_string() + ":" + mult.str();
  }
  return out;
}

const char* kCsvHeader = "n,lhs,rhs,eta,components\n";

std::string csv_row(const ClassProduct& p) {
  return std::to_string(p.n()) + "," + quote(p.lhs.to_string()) + "," + quote(p.rhs.to_string()) +
         "," + std::to_string(p.eta()) + "," + quote(components_field(p)) + "\n";
}

std::string text_product(const ClassProduct& p) {
  std::ostringstream os;
  os << "n: " << p.n() << "\nlhs: " << p.lhs.to_string() << "\nrhs: " << p.rhs.to_string()
     << "\neta: " << p.eta() << "\ncomponents:\n";
  for (const auto& [nu, mult] : p.components) os << "  " << nu.to_string() << "  multiplicity " << mult << "\n";
  return os.str();
}

/// Writes the whole payload at once, to a file or to `out`.
void emit(const RunConfig& config, const std::string& payload, std::ostream& out) {
  if (config.output_path.empty()) {
    out << payload;
    out.flush();
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + config.output_path + "' for writing");
  file << payload;
  file.close();
  if (!file) throw IoError("failed writing '" + config.output_path + "'");
}

void check_n(int n, const Limits& limits) {
  if (n < 1) throw DomainError("--n must be positive");
  if (n > limits.max_n) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the bound " +
                        std::to_string(limits.max_n) + " (CLASSPROD_MAX_N)");
  }
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw DomainError("unsupported --format '" + format + "'");
}

CycleType parse_type_of(const std::string& text, int n, const char* flag) {
  CycleType t = CycleType::parse(text);
  if (t.n() != n) {
    throw ParseError(std::string(flag) + " " + text + " is a partition of " + std::to_string(t.n()) +
                     ", not of " + std::to_string(n));
  }
  return t;
}

int cmd_eta(const RunConfig& config, const Limits& limits, std::ostream& out) {
  check_n(config.n, limits);
  check_format(config.format, {"text", "json", "csv"});
  const CycleType lhs = parse_type_of(config.lhs, config.n, "--lhs");
  const CycleType rhs = parse_type_of(config.rhs, config.n, "--rhs");
  const Engine engine = parse_engine(config.engine);
  const ClassProduct product = eta(lhs, rhs, engine, limits);
  if (config.format == "json") {
    emit(config, to_json(product).dump(2) + "\n", out);
  } else if (config.format == "csv") {
    emit(config, std::string(kCsvHeader) + csv_row(product), out);
  } else {
    emit(config, text_product(product), out);
  }
  return kSuccess;
}

// Bump when the table layout or the engines change.
constexpr int kCacheFormat = 1;

std::string cache_version() { return std::string(CLASSPROD_VERSION) + "." + std::to_string(kCacheFormat); }

std::filesystem::path cache_file(const RunConfig& config) {
  return std::filesystem::path(config.cache_dir) /
         ("eta_table_n" + std::to_string(config.n) + "_" + config.engine + "_v" + cache_version() + ".json");
}

std::optional<json> load_cache(const RunConfig& config) {
  if (config.cache_dir.empty()) return std::nullopt;
  std::ifstream file(cache_file(config));
  if (!file) return std::nullopt;
  try {
    json doc = json::parse(file);
    if (doc.at("version") != cache_version() || doc.at("n") != config.n ||
        doc.at("engine") != config.engine) {
      return std::nullopt;
    }
    return doc;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void store_cache(const RunConfig& config, const json& doc) {
  if (config.cache_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(config.cache_dir, ec);
  const auto path = cache_file(config);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write cache file '" + tmp + "'");
    file << doc.dump() << "\n";
    if (!file) throw IoError("cannot write cache file '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot write cache file '" + path.string() + "'");
}

int cmd_table(const RunConfig& config, const Limits& limits, std::ostream& out) {
  check_n(config.n, limits);
  check_format(config.format, {"text", "json", "csv"});
  const Engine engine = parse_engine(config.engine);

  json doc;
  if (auto cached = load_cache(config)) {
    doc = std::move(*cached);
  } else {
    json rows = json::array();
    if (config.n >= 2) {
      // Products are symmetric in their factors; compute each unordered
      // pair once and emit both orders.
      const auto types = partitions_of(config.n, limits);
      std::map<std::pair<std::size_t, std::size_t>, ClassProduct> products;
      for (const auto& p : eta_table(config.n, engine, limits)) {
        auto index = [&](const CycleType& t) {
          return static_cast<std::size_t>(std::find(types.begin(), types.end(), t) - types.begin());
        };
        products.emplace(std::pair{index(p.lhs), index(p.rhs)}, p);
      }
      for (std::size_t i = 0; i < types.size(); ++i) {
        for (std::size_t j = 0; j < types.size(); ++j) {
          if (types[i].is_identity() || types[j].is_identity()) continue;
          ClassProduct p = products.at({std::min(i, j), std::max(i, j)});
          p.lhs = types[i];
          p.rhs = types[j];
          rows.push_back(to_json(p));
        }
      }
    }
    doc = json{{"n", config.n}, {"engine", config.engine}, {"version", cache_version()},
               {"rows", std::move(rows)}};
    store_cache(config, doc);
  }

  std::string payload;
  if (config.format == "json") {
    payload = json{{"n", config.n}, {"rows", doc.at("rows")}}.dump(2) + "\n";
  } else if (config.format == "csv") {
    payload = kCsvHeader;
    for (const auto& row : doc.at("rows")) payload += csv_row(class_product_from_json(row));
  } else {
    std::ostringstream os;
    for (const auto& row : doc.at("rows")) {
      const ClassProduct p = class_product_from_json(row);
      os << p.lhs.to_string() << " x " << p.rhs.to_string() << " : eta " << p.eta() << "\n";
    }
    payload = os.str();
  }
  emit(config, payload, out);
  return kSuccess;
}

std::string text_report(const VerificationReport& report, bool timing) {
  std::ostringstream os;
  os << to_string(report.statement) << " n=" << report.n_from;
  if (report.n_to != report.n_from) os << ".." << report.n_to;
  os << ": " << (report.passed() ? "pass" : "fail");
  if (report.seed) os << " (seed " << *report.seed << ")";
  if (timing) os << " [" << report.elapsed.count() << " ms]";
  os << "\n";
  for (const auto& w : report.witnesses) {
    if (w.ok && report.passed() && w.note != "minimum" && report.statement != Statement::constructions) continue;
    os << "  " << (w.ok ? "ok  " : "FAIL") << " n=" << w.n;
    if (w.lhs) os << " " << *w.lhs << " | " << w.rhs.value_or("");
    os << " observed " << w.observed << ", expected " << w.expected;
    if (!w.note.empty()) os << " (" << w.note << ")";
    os << "\n";
  }
  return os.str();
}

int cmd_verify(const RunConfig& config, const Limits& limits, std::ostream& out) {
  check_format(config.format, {"text", "json"});
  if (config.n_from < 4 || config.n_from > config.n_to) {
    throw DomainError("need 4 <= --from <= --to");
  }
  check_n(config.n_to, limits);
  if (config.trials < 1) throw DomainError("--trials must be positive");

  std::vector<Statement> statements;
  if (config.statement == "all") {
    statements = all_statements();
  } else {
    statements = {parse_statement(config.statement)};
  }
  auto once = [](Statement s) {
    return s == Statement::small_n || s == Statement::s4_single_class ||
           s == Statement::s5_two_class || s == Statement::s6_one_fixed_point;
  };
  if (config.statement == "all") {
    // small_n already covers the three individual small-degree checks.
    std::erase_if(statements, [&](Statement s) { return once(s) && s != Statement::small_n; });
  }

  std::vector<VerificationReport> reports;
  for (Statement s : statements) {
    if (once(s)) {
      reports.push_back(verify(s, config.n_from, config.seed, config.trials, limits));
      continue;
    }
    bool ran = false;
    for (int n = config.n_from; n <= config.n_to; ++n) {
      if (!applies(s, n)) continue;
      reports.push_back(verify(s, n, config.seed, config.trials, limits));
      ran = true;
    }
    if (!ran && config.statement != "all") {
      throw DomainError("statement " + config.statement + " does not apply to n in [" +
                        std::to_string(config.n_from) + ", " + std::to_string(config.n_to) + "]");
    }
  }

  std::string payload;
  if (config.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, config.timing));
    payload = arr.dump(2) + "\n";
  } else {
    for (const auto& r : reports) payload += text_report(r, config.timing);
  }
  emit(config, payload, out);
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all_pass ? kSuccess : kVerificationFailed;
}

int cmd_construct(const RunConfig& config, const Limits& limits, std::ostream& out) {
  check_n(config.n, limits);
  check_format(config.format, {"text", "json"});
  const Permutation alpha = Permutation::parse(config.alpha, config.n);
  const Permutation beta = Permutation::parse(config.beta, config.n);

  ConjugatorWitness w;
  switch (config.lemma) {
    case 5: w = make_witness(alpha, beta, avoid_conjugator(alpha, beta)); break;
    case 6: w = derangement_product(alpha, beta); break;
    case 7:
      if (config.m < 1) throw DomainError("--lemma 7 needs --m");
      w = shrink_fixed_points(alpha, beta, config.m, config.n);
      break;
    case 11: w = at_least_one_fixed_point(alpha, beta); break;
    case 12: w = one_fixed_point_product(alpha, beta); break;
    case 13: w = two_fixed_point_product(alpha, beta); break;
    default: throw DomainError("--lemma must be one of 5, 6, 7, 11, 12, 13");
  }
  const Permutation conj = conjugate(config.lemma == 7 ? embed(restrict_to(alpha, config.m), config.n) : alpha,
                                     w.sigma);

  std::string payload;
  if (config.format == "json") {
    json j{{"lemma", config.lemma},
           {"n", config.n},
           {"alpha", alpha.to_string()},
           {"beta", beta.to_string()},
           {"sigma", w.sigma.to_string()},
           {"conjugate", conj.to_string()},
           {"product", w.product.to_string()},
           {"fixed_points", w.fixed_points}};
    payload = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "alpha: " << alpha.to_string() << "\nbeta: " << beta.to_string()
       << "\nsigma: " << w.sigma.to_string() << "\nalpha^sigma: " << conj.to_string()
       << "\nproduct: " << w.product.to_string() << "\nfixed points:";
    if (w.fixed_points.empty()) os << " none";
    for (int p : w.fixed_points) os << " " << p;
    os << "\n";
    payload = os.str();
  }
  emit(config, payload, out);
  return kSuccess;
}

void check_table(const CharacterTable& table) {
  BigInt sum = 0;
  for (const auto& d : table.dims()) sum += d * d;
  if (sum != table.group_order()) throw InvariantViolation("character table: sum of dims^2 != n!");
  const int p = table.size();
  for (int a = 0; a < p; ++a) {
    for (int b = a; b < p; ++b) {
      BigInt dot = 0;
      for (int chi = 0; chi < p; ++chi) dot += BigInt(table.value(chi, a)) * table.value(chi, b);
      const BigInt expected = a == b ? table.group_order() / table.class_size(a) : BigInt(0);
      if (dot != expected) throw InvariantViolation("character table: column orthogonality fails");
    }
  }
}

int cmd_chartable(const RunConfig& config, const Limits& limits, std::ostream& out) {
  check_n(config.n, limits);
  check_format(config.format, {"text", "json", "csv"});
  const auto table = character_table(config.n, limits);
  check_table(*table);
  const int p = table->size();
  const auto& labels = table->partitions();

  std::string payload;
  if (config.format == "json") {
    json classes = json::array(), sizes = json::array(), dims = json::array(), values = json::array();
    for (int i = 0; i < p; ++i) {
      classes.push_back(labels[static_cast<std::size_t>(i)].to_string());
      sizes.push_back(table->class_size(i).str());
      dims.push_back(table->dim(i).str());
      json row = json::array();
      for (int j = 0; j < p; ++j) row.push_back(table->value(i, j));
      values.push_back(std::move(row));
    }
    payload = json{{"n", config.n},     {"classes", classes}, {"class_sizes", sizes},
                   {"irreducibles", classes}, {"dims", dims},  {"values", values}}
                  .dump(2) + "\n";
  } else if (config.format == "csv") {
    std::ostringstream os;
    os << "irreducible";
    for (const auto& c : labels) os << "," << quote(c.to_string());
    os << "\n" << quote("class_size");
    for (int j = 0; j < p; ++j) os << "," << table->class_size(j);
    os << "\n";
    for (int i = 0; i < p; ++i) {
      os << quote(labels[static_cast<std::size_t>(i)].to_string());
      for (int j = 0; j < p; ++j) os << "," << table->value(i, j);
      os << "\n";
    }
    payload = os.str();
  } else {
    std::ostringstream os;
    std::size_t width = 4;
    for (const auto& c : labels) width = std::max(width, c.to_string().size() + 2);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) width = std::max(width, std::to_string(table->value(i, j)).size() + 2);
      width = std::max(width, table->class_size(i).str().size() + 2);
    }
    auto cell = [&](const std::string& s) {
      os << std::string(width - std::min(width, s.size()), ' ') << s;
    };
    cell("");
    for (const auto& c : labels) cell(c.to_string());
    os << "\n";
    cell("|C|");
    for (int j = 0; j < p; ++j) cell(table->class_size(j).str());
    os << "\n";
    for (int i = 0; i < p; ++i) {
      cell(labels[static_cast<std::size_t>(i)].to_string());
      for (int j = 0; j < p; ++j) cell(std::to_string(table->value(i, j)));
      os << "\n";
    }
    payload = os.str();
  }
  emit(config, payload, out);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Products of conjugacy classes in symmetric groups", "classprod"};
  app.require_subcommand(1, 1);
  RunConfig config;

  auto* eta_cmd = app.add_subcommand("eta", "decompose one class product");
  eta_cmd->add_option("--n", config.n, "degree")->required();
  eta_cmd->add_option("--lhs", config.lhs, "left cycle type, e.g. 2,1,1")->required();
  eta_cmd->add_option("--rhs", config.rhs, "right cycle type")->required();
  eta_cmd->add_option("--engine", config.engine, "brute, character or auto")->capture_default_str();

  auto* table_cmd = app.add_subcommand("table", "eta for every pair of non-identity classes");
  table_cmd->add_option("--n", config.n, "degree")->required();
  table_cmd->add_option("--engine", config.engine, "brute, character or auto");
  table_cmd->add_option("--cache-dir", config.cache_dir, "reuse and store results here");

  auto* verify_cmd = app.add_subcommand("verify", "check statements over a range of n");
  verify_cmd->add_option("--statement", config.statement, "statement id or 'all'")->capture_default_str();
  verify_cmd->add_option("--from", config.n_from, "first n")->required();
  verify_cmd->add_option("--to", config.n_to, "last n")->required();
  verify_cmd->add_option("--seed", config.seed, "seed for randomized checks")->capture_default_str();
  verify_cmd->add_option("--trials", config.trials, "random trials per construction")->capture_default_str();
  verify_cmd->add_flag("--timing", config.timing, "include elapsed times");

  auto* construct_cmd = app.add_subcommand("construct", "run one of the explicit constructions");
  construct_cmd->add_option("--lemma", config.lemma, "5, 6, 7, 11, 12 or 13")->required();
  construct_cmd->add_option("--n", config.n, "degree")->required();
  construct_cmd->add_option("--alpha", config.alpha, "cycle notation")->required();
  construct_cmd->add_option("--beta", config.beta, "cycle notation")->required();
  construct_cmd->add_option("--m", config.m, "support size for --lemma 7");

  auto* chartable_cmd = app.add_subcommand("chartable", "the character table of S_n");
  chartable_cmd->add_option("--n", config.n, "degree")->required();

  // Defaults differ per subcommand; whichever was chosen sets them below.
  for (auto* cmd : {eta_cmd, table_cmd, verify_cmd, construct_cmd, chartable_cmd}) {
    cmd->add_option("--format", config.format, "text, json or csv");
    cmd->add_option("--output", config.output_path, "write results to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (config.format.empty()) {
      config.format = table_cmd->parsed() ? "csv" : "text";
    }
    if (table_cmd->parsed() && table_cmd->count("--engine") == 0) config.engine = "character";
    if (eta_cmd->parsed()) return cmd_eta(config, limits, out);
    if (table_cmd->parsed()) return cmd_table(config, limits, out);
    if (verify_cmd->parsed()) return cmd_verify(config, limits, out);
    if (construct_cmd->parsed()) return cmd_construct(config, limits, out);
    return cmd_chartable(config, limits, out);
  } catch (const ImpossibleCaseError& e) {
    err << "documented exception (" << e.reference() << "): " << e.what() << "\n";
    return kImpossible;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace classprod::cli
