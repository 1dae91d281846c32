#include "cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "oddlen/closed_forms.hpp"
#include "oddlen/enumeration.hpp"
#include "oddlen/odd_length.hpp"
#include "oddlen/permutation.hpp"
#include "oddlen/verifier.hpp"

namespace oddlen::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CliConfig {
  std::string command;
  std::string group = "A";
  std::string window;
  int n = 0;
  std::string set_text;
  std::string restrict_name = "all";
  bool chi = false;
  std::string formula;
  std::string format = "text";
  std::string suite = "default";
  std::optional<int> max_n_a;
  std::optional<int> max_n_b;
  std::optional<int> max_n;
  int threads = 0;  // 0 = hardware default
  std::string report = "text";
};

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

GroupKind parse_group(const std::string& g) {
  if (g == "A" || g == "a") return GroupKind::A;
  if (g == "B" || g == "b") return GroupKind::B;
  throw std::invalid_argument("unknown group: " + g + " (expected A or B)");
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string coeff_csv(const IntPolynomial& p) {
  std::string out;
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i) out += ',';
    out += cs[i].str();
  }
  return out;
}

nlohmann::json poly_json(const IntPolynomial& p) {
  return nlohmann::json::parse(to_json_string(p));
}

nlohmann::json descents_json(const IndexSet& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i : d.members()) arr.push_back(i);
  return arr;
}

int run_stats(const CliConfig& cfg, std::ostream& out) {
  const GroupKind kind = parse_group(cfg.group);
  nlohmann::json j;
  std::ostringstream text;
  std::string csv_header = "group,window,n,length,odd_length,right_descents,chessboard,chi";
  std::string csv_row;

  auto chi_text = [](ChessboardClass cls, auto&& elem) {
    return cls == ChessboardClass::NotChessboard
               ? std::string("n/a")
               : std::string(chi(elem) > 0 ? "+1" : "-1");
  };

  if (kind == GroupKind::A) {
    const PermutationA w = PermutationA::parse(cfg.window);
    const ChessboardClass cls = chessboard_class(w);
    const IndexSet d = right_descents(w);
    text << "group: A\nwindow: " << w.str() << "\nn: " << w.n()
         << "\nlength: " << length(w) << "\nodd_length: " << odd_length_a(w)
         << "\nright_descents: " << d.str()
         << "\nchessboard: " << chessboard_class_name(cls)
         << "\nchi: " << chi_text(cls, w) << "\n";
    j = {{"group", "A"},
         {"window", w.window()},
         {"n", w.n()},
         {"length", length(w)},
         {"odd_length", odd_length_a(w)},
         {"right_descents", descents_json(d)},
         {"chessboard", chessboard_class_name(cls)}};
    j["chi"] = cls == ChessboardClass::NotChessboard ? nlohmann::json(nullptr)
                                                     : nlohmann::json(chi(w));
    csv_row = "A," + csv_quote(w.str()) + "," + std::to_string(w.n()) + "," +
              std::to_string(length(w)) + "," + std::to_string(odd_length_a(w)) + "," +
              csv_quote(d.str()) + "," + chessboard_class_name(cls) + "," +
              chi_text(cls, w);
  } else {
    const PermutationB w = PermutationB::parse(cfg.window);
    const ChessboardClass cls = chessboard_class(w);
    const IndexSet d = right_descents(w);
    const OddStatsB stats = odd_stats_b(w);
    text << "group: B\nwindow: " << w.str() << "\nn: " << w.n()
         << "\nlength: " << length(w) << "\nodd_length: " << odd_length_b(w)
         << "\nright_descents: " << d.str()
         << "\nchessboard: " << chessboard_class_name(cls)
         << "\nchi: " << chi_text(cls, w) << "\noinv: " << stats.oinv
         << "\noneg: " << stats.oneg << "\nonsp: " << stats.onsp << "\n";
    j = {{"group", "B"},
         {"window", w.window()},
         {"n", w.n()},
         {"length", length(w)},
         {"odd_length", odd_length_b(w)},
         {"right_descents", descents_json(d)},
         {"chessboard", chessboard_class_name(cls)},
         {"oinv", stats.oinv},
         {"oneg", stats.oneg},
         {"onsp", stats.onsp}};
    j["chi"] = cls == ChessboardClass::NotChessboard ? nlohmann::json(nullptr)
                                                     : nlohmann::json(chi(w));
    csv_header += ",oinv,oneg,onsp";
    csv_row = "B," + csv_quote(w.str()) + "," + std::to_string(w.n()) + "," +
              std::to_string(length(w)) + "," + std::to_string(odd_length_b(w)) + "," +
              csv_quote(d.str()) + "," + chessboard_class_name(cls) + "," +
              chi_text(cls, w) + "," + std::to_string(stats.oinv) + "," +
              std::to_string(stats.oneg) + "," + std::to_string(stats.onsp);
  }

  if (cfg.format == "json") {
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << csv_header << "\n" << csv_row << "\n";
  } else {
    out << text.str();
  }
  return kExitOk;
}

int run_gf(const CliConfig& cfg, std::ostream& out) {
  const GroupKind kind = parse_group(cfg.group);
  EnumerationLimits limits;
  if (cfg.max_n) {
    limits.max_n_a = *cfg.max_n;
    limits.max_n_b = *cfg.max_n;
  }
  const IndexSet I = IndexSet::parse(kind, cfg.n, cfg.set_text);
  const WeightSpec spec{restriction_from_name(cfg.restrict_name), cfg.chi};
  spec.validate();
  const int threads = cfg.threads > 0 ? cfg.threads : default_threads();
  const DescentClassTable table = build_descent_class_table(kind, cfg.n, threads, limits);
  const IntPolynomial p = table.quotient_poly(I, spec);

  if (cfg.format == "json") {
    nlohmann::json j = {{"command", "gf"},
                        {"group", std::string(1, kind_letter(kind))},
                        {"n", cfg.n},
                        {"set", descents_json(I)},
                        {"restrict", restriction_name(spec.restrict_to)},
                        {"chi", spec.apply_chi},
                        {"polynomial", poly_json(p)}};
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "group,n,set,restrict,chi,coeffs\n"
        << kind_letter(kind) << "," << cfg.n << "," << csv_quote(I.str()) << ","
        << restriction_name(spec.restrict_to) << "," << (spec.apply_chi ? "true" : "false")
        << "," << csv_quote(coeff_csv(p)) << "\n";
  } else {
    out << p.str() << "\n";
  }
  return kExitOk;
}

int run_closed(const CliConfig& cfg, std::ostream& out) {
  const int n = cfg.n;
  IntPolynomial p;
  std::string set_str;
  if (cfg.formula == "chessboard-plus" || cfg.formula == "chessboard-minus" ||
      cfg.formula == "conjA" || cfg.formula == "sn-quotient") {
    const IndexSet I = IndexSet::parse(GroupKind::A, n, cfg.set_text);
    set_str = I.str();
    if (cfg.formula == "chessboard-plus") {
      p = closed_chessboard_plus(n, I);
    } else if (cfg.formula == "chessboard-minus") {
      p = closed_chessboard_minus(n, I);
    } else if (cfg.formula == "conjA") {
      p = closed_conj_a(n, I);
    } else {
      p = closed_sn_quotient(n, I);
    }
  } else if (cfg.formula == "conjB") {
    const IndexSet J = IndexSet::parse(GroupKind::B, n, cfg.set_text);
    set_str = J.str();
    p = closed_conj_b(n, J);
  } else if (cfg.formula == "sn-full" || cfg.formula == "b-ascending") {
    if (!cfg.set_text.empty())
      throw std::invalid_argument("formula " + cfg.formula + " does not take --set");
    p = cfg.formula == "sn-full" ? closed_sn_full(n) : closed_b_ascending(n);
  } else {
    throw std::invalid_argument(
        "unknown formula: " + cfg.formula +
        " (expected chessboard-plus, chessboard-minus, conjA, sn-quotient, sn-full, "
        "b-ascending, conjB)");
  }

  if (cfg.format == "json") {
    nlohmann::json j = {{"command", "closed"},
                        {"formula", cfg.formula},
                        {"n", n},
                        {"set", set_str},
                        {"polynomial", poly_json(p)}};
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "formula,n,set,coeffs\n"
        << cfg.formula << "," << n << "," << csv_quote(set_str) << ","
        << csv_quote(coeff_csv(p)) << "\n";
  } else {
    out << p.str() << "\n";
  }
  return kExitOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const EnumerationLimits limits;
  if ((cfg.max_n_a && *cfg.max_n_a > limits.max_n_a) ||
      (cfg.max_n_b && *cfg.max_n_b > limits.max_n_b)) {
    err << "verify: requested rank caps exceed the resource limits (A<=" << limits.max_n_a
        << ", B<=" << limits.max_n_b << ")\n";
    return kExitResource;
  }

  SuiteConfig config;
  if (cfg.suite == "default") {
    config.ids = all_identities();
  } else {
    std::stringstream ss(cfg.suite);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto id = identity_from_name(name);
      if (!id) throw std::invalid_argument("unknown identity: " + name);
      config.ids.push_back(*id);
    }
    if (config.ids.empty()) throw std::invalid_argument("empty identity list");
  }
  config.params.max_n_a = cfg.max_n_a;
  config.params.max_n_b = cfg.max_n_b;
  config.params.threads = cfg.threads > 0 ? cfg.threads : default_threads();

  TableCache cache(config.params.threads, limits);
  const std::vector<CheckReport> reports = run_suite(config, cache);

  if (cfg.report == "json") {
    out << reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) out << report_line(r) << "\n";
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    out << passed << "/" << reports.size() << " identities verified\n";
  }
  return all_passed(reports) ? kExitOk : kExitFailure;
}

// "--window -2,4,..." style: glue the value onto the flag so the parser does
// not mistake a leading dash for an option.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  static const std::vector<std::string> value_flags = {"--window", "--set"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    bool glued = false;
    for (const auto& flag : value_flags) {
      if (args[i] == flag && i + 1 < args.size()) {
        out.push_back(flag + "=" + args[i + 1]);
        ++i;
        glued = true;
        break;
      }
    }
    if (!glued) out.push_back(args[i]);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"odd length statistics, signed generating functions and closed forms "
               "on symmetric and hyperoctahedral groups"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* stats = app.add_subcommand("stats", "statistics of one element");
  stats->add_option("--group", cfg.group, "A or B")->required();
  stats->add_option("--window", cfg.window, "comma separated window, e.g. -2,4,3,-1")
      ->required();
  stats->add_option("--format", cfg.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* gf = app.add_subcommand("gf", "signed generating function over a quotient");
  gf->add_option("--group", cfg.group, "A or B")->required();
  gf->add_option("--n", cfg.n, "rank")->required();
  gf->add_option("--set", cfg.set_text, "index set, comma separated (empty = whole group)");
  gf->add_option("--restrict", cfg.restrict_name, "all|chess|plus|minus")
      ->check(CLI::IsMember({"all", "chess", "plus", "minus"}));
  gf->add_flag("--chi", cfg.chi, "weight terms by the chessboard character");
  gf->add_option("--threads", cfg.threads, "worker partitions (default: hardware)");
  gf->add_option("--max-n", cfg.max_n, "override the rank resource limit");
  gf->add_option("--format", cfg.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* closed = app.add_subcommand("closed", "closed-form polynomial");
  closed
      ->add_option("--formula", cfg.formula,
                   "chessboard-plus|chessboard-minus|conjA|sn-quotient|sn-full|"
                   "b-ascending|conjB")
      ->required();
  closed->add_option("--n", cfg.n, "rank")->required();
  closed->add_option("--set", cfg.set_text, "index set, comma separated");
  closed->add_option("--format", cfg.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--suite", cfg.suite, "default, or comma separated identity names");
  verify->add_option("--max-n-a", cfg.max_n_a, "type A rank cap override");
  verify->add_option("--max-n-b", cfg.max_n_b, "type B rank cap override");
  verify->add_option("--threads", cfg.threads, "worker partitions (default: hardware)");
  verify->add_option("--report", cfg.report, "json|text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv = glue_values(args);
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (stats->parsed()) {
      cfg.command = "stats";
      return run_stats(cfg, out);
    }
    if (gf->parsed()) {
      cfg.command = "gf";
      return run_gf(cfg, out);
    }
    if (closed->parsed()) {
      cfg.command = "closed";
      return run_closed(cfg, out);
    }
    cfg.command = "verify";
    return run_verify(cfg, out, err);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace oddlen::cli
