#include "cli.h"

#include <CLI11.hpp>
#include <filesystem>
#include <sstream>
#include <thread>

#include "sepcode/bounds.h"
#include "sepcode/construct.h"
#include "sepcode/io.h"
#include "sepcode/verify.h"

namespace sepcode::cli {
namespace {

struct Globals {
  std::string format = "json";
  std::string output;
  std::uint64_t budget = VerifyOptions{}.budget;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
};

class Output {
 public:
  Output(const Globals& g, std::ostream& out) : path_(g.output), out_(out) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      out_ << text;
    } else {
      buffer_ << text;
    }
  }

  void flush() {
    if (!path_.empty()) write_file(path_, buffer_.str());
  }

 private:
  std::string path_;
  std::ostream& out_;
  std::ostringstream buffer_;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidArgument("bad list entry '" + item + "' in '" + text + "'");
    }
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string report_text(const VerifyReport& r) {
  std::ostringstream o;
  o << r.property;
  if (r.strength) o << " t=" << *r.strength;
  o << " method=" << to_string(r.method) << " holds=" << (r.holds ? "yes" : "no")
    << " examined=" << r.examined << " elapsed_ms=" << r.elapsed_ms << '\n';
  if (r.witness) o << "witness " << to_json(*r.witness).dump() << '\n';
  return o.str();
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::uint64_t n = 0, q = 0, r = 0, k = 0;
  std::string s = "all";
  std::uint64_t eps_index = 0;
  std::string field;
};

FiniteField field_for(const ConstructArgs& a) {
  if (!a.field.empty()) {
    const std::string text = std::filesystem::exists(a.field)
                                 ? read_file(a.field)
                                 : a.field;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad field descriptor: ") + e.what());
    }
    return FiniteField::from_descriptor(field_from_json(j));
  }
  const auto [p, m] = prime_power(a.q);
  return FiniteField::make(p, m, a.eps_index);
}

ExponentSet exponents_for(const std::string& s, std::uint64_t t) {
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) {
    return ExponentSet::custom(t, parse_list(s));
  }
  return ExponentSet::from_pattern(parse_exponent_pattern(s), t);
}

int emit_construction(const Globals& g, std::ostream& out, const Code& code,
                      Json header) {
  Output sink(g, out);
  const auto format = parse_code_format(g.format);
  if (format == CodeFormat::kJson) {
    Json j = std::move(header);
    j.update(to_json(code));
    sink.write(j.dump() + "\n");
  } else {
    sink.write(serialize(code, format));
  }
  sink.flush();
  return kHolds;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::string property = "sc-bar";
  int t = 3;
  std::string method = "oracle";
  bool certify = false;
};

std::vector<VerifyReport> run_verify(const VerifyArgs& a, const Code& code,
                                     const VerifyOptions& opts) {
  const bool oracle = a.method == "oracle" || a.method == "both";
  const bool structural = a.method == "structural" || a.method == "both";
  if (!oracle && !structural) {
    throw InvalidArgument("method must be oracle, structural or both");
  }
  auto need_structural_shape = [&](int t) {
    if (code.length() != 3 || a.t != t) {
      throw InvalidArgument("structural " + a.property + " check needs n=3, t=" +
                            std::to_string(t));
    }
  };
  std::vector<VerifyReport> reports;
  if (a.property == "sc-bar") {
    if (oracle) reports.push_back(oracle_sc_bar(code, a.t, opts));
    if (structural) {
      need_structural_shape(3);
      reports.push_back(check_sc3bar_structural(code));
    }
  } else if (a.property == "sc3bar-structural") {
    reports.push_back(check_sc3bar_structural(code));
  } else if (a.property == "sc") {
    if (structural) throw InvalidArgument("sc has no structural check");
    reports.push_back(oracle_sc_exact(code, a.t, opts));
  } else if (a.property == "fpc") {
    if (oracle) reports.push_back(check_fpc(code, a.t, opts));
    if (structural) {
      need_structural_shape(2);
      reports.push_back(check_fpc2_projection(code));
    }
  } else if (a.property == "phf") {
    if (structural) throw InvalidArgument("phf has no structural check");
    reports.push_back(check_phf(code, a.t, opts));
  } else {
    throw InvalidArgument("unknown property '" + a.property + "'");
  }
  return reports;
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  const Code code = deserialize_auto(read_file(a.file));
  const VerifyOptions opts{g.budget, g.workers};
  auto reports = run_verify(a, code, opts);

  bool disagree = false;
  for (const auto& r : reports) disagree |= r.holds != reports.front().holds;
  const bool holds = reports.front().holds;

  Output sink(g, out);
  if (g.format == "text") {
    for (const auto& r : reports) sink.write(report_text(r));
    if (disagree) sink.write("METHODS DISAGREE\n");
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json j = to_json(r);
      if (a.certify && r.holds && r.property == "sc-bar") {
        if (auto c = certify(code, r)) j["certification"] = to_json(*c);
      }
      arr.push_back(std::move(j));
    }
    Json doc = arr.size() == 1 ? arr[0] : arr;
    if (disagree) doc = Json{{"disagreement", true}, {"reports", arr}};
    sink.write(doc.dump() + "\n");
  }
  sink.flush();
  if (disagree) return kDisagreement;
  return holds ? kHolds : kViolated;
}

// -------------------------------------------------------------------- bound

struct BoundArgs {
  std::uint64_t q = 0;
  std::uint64_t n = 3;
  std::uint64_t t = 3;
};

int cmd_bound(const Globals& g, const BoundArgs& a, std::ostream& out) {
  if (a.q < 2) throw InvalidArgument("q must be >= 2");
  const auto bounds = applicable_bounds(a.n, a.q, a.t);
  Output sink(g, out);
  if (g.format == "text") {
    for (const auto& b : bounds) {
      sink.write(std::string(to_string(b.kind)) + " " +
                 std::to_string(b.value) + " " + b.source +
                 (b.notes.empty() ? "" : " (" + b.notes + ")") + "\n");
    }
  } else {
    Json arr = Json::array();
    for (const auto& b : bounds) arr.push_back(to_json(b));
    sink.write(arr.dump() + "\n");
  }
  sink.flush();
  return kHolds;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  std::uint64_t q = 0;
  std::string patterns = "all";
  std::string s;
  std::string eps = "first";
  std::string emit_dir;
};

int cmd_search(const Globals& g, const SearchArgs& a, std::ostream& out) {
  DfSearchOptions opts;
  opts.patterns.clear();
  for (const auto& name : split_names(a.patterns)) {
    opts.patterns.push_back(parse_exponent_pattern(name));
  }
  if (!a.s.empty()) {
    opts.custom = parse_list(a.s);
    if (std::find(opts.patterns.begin(), opts.patterns.end(),
                  ExponentPattern::kCustom) == opts.patterns.end()) {
      opts.patterns.push_back(ExponentPattern::kCustom);
    }
  }
  opts.eps = EpsSelection::parse(a.eps);
  opts.workers = g.workers;
  const auto records = df_search(a.q, opts);

  if (!a.emit_dir.empty()) std::filesystem::create_directories(a.emit_dir);
  Output sink(g, out);
  bool any = false;
  bool verifier_failed = false;
  for (const auto& rec : records) {
    Json j = to_json(rec);
    if (rec.admissible && !a.emit_dir.empty()) {
      const FiniteField field = FiniteField::from_descriptor(rec.field);
      const Code code = df_code(field, rec.s);
      const auto path = (std::filesystem::path(a.emit_dir) /
                         ("df-q" + std::to_string(a.q) + "-eps" +
                          std::to_string(rec.eps_rank) + "-" +
                          to_string(rec.s.pattern) + ".json"))
                            .string();
      Json file = {{"construction", "df"},
                   {"params", {{"q", a.q}, {"eps_rank", rec.eps_rank}}},
                   {"field", to_json(rec.field)},
                   {"S", rec.s.s}};
      file.update(to_json(code));
      write_file(path, file.dump() + "\n");
      const auto report = check_sc3bar_structural(code);
      j["code_file"] = path;
      j["verified"] = report.holds;
      verifier_failed |= !report.holds;
    }
    any |= rec.admissible;
    sink.write(j.dump() + "\n");
  }
  sink.flush();
  if (verifier_failed) return kDisagreement;
  return any ? kHolds : kViolated;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Construct, verify and search 3-bar separable codes", "sepcode"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "pls"}));
  app.add_option("-o,--output", g.output, "Write results to this file");
  app.add_option("--budget", g.budget, "Maximum subsets to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  int code = kHolds;
  std::function<int()> action;

  // construct
  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a code");
  construct->require_subcommand(1);
  auto* c_fpc = construct->add_subcommand("trivial-fpc", "Block frameproof code");
  c_fpc->add_option("--n", ca.n, "Length")->required();
  c_fpc->add_option("--q", ca.q, "Alphabet size")->required();
  c_fpc->callback([&] {
    action = [&] {
      return emit_construction(
          g, out, trivial_fpc(ca.n, static_cast<std::uint32_t>(ca.q)),
          {{"construction", "trivial-fpc"},
           {"params", {{"n", ca.n}, {"q", ca.q}}},
           {"field", nullptr},
           {"S", nullptr}});
    };
  });
  auto* c_cube = construct->add_subcommand("phf-cube", "Cube code over r^2 symbols");
  c_cube->add_option("--r", ca.r, "Side r")->required();
  c_cube->callback([&] {
    action = [&] {
      return emit_construction(g, out,
                               phf_cube(static_cast<std::uint32_t>(ca.r)),
                               {{"construction", "phf-cube"},
                                {"params", {{"r", ca.r}}},
                                {"field", nullptr},
                                {"S", nullptr}});
    };
  });
  auto* c_ext = construct->add_subcommand("phf-extended", "Cube code plus the two shifted parts");
  c_ext->add_option("--k", ca.k, "Even k, r = k^2")->required();
  c_ext->callback([&] {
    action = [&] {
      return emit_construction(g, out,
                               phf_extended(static_cast<std::uint32_t>(ca.k)),
                               {{"construction", "phf-extended"},
                                {"params", {{"k", ca.k}}},
                                {"field", nullptr},
                                {"S", nullptr}});
    };
  });
  auto* c_df = construct->add_subcommand("df", "Difference-family code");
  c_df->add_option("--q", ca.q, "Field order, 1 mod 6");
  c_df->add_option("--s", ca.s,
                   "Exponent pattern (all, mod3-nonzero, even, mod3-zero) or "
                   "a comma-separated list");
  c_df->add_option("--eps-index", ca.eps_index, "Primitive element rank");
  c_df->add_option("--field", ca.field, "Field descriptor JSON (file or inline)");
  c_df->callback([&] {
    action = [&] {
      if (ca.field.empty() && ca.q == 0) {
        throw InvalidArgument("df needs --q or --field");
      }
      const FiniteField field = field_for(ca);
      const std::uint64_t q = field.order();
      if (q % 6 != 1) {
        throw InvalidArgument("q=" + std::to_string(q) + " is not 1 mod 6");
      }
      const ExponentSet s = exponents_for(ca.s, (q - 1) / 6);
      return emit_construction(
          g, out, df_code(field, s),
          {{"construction", "df"},
           {"params", {{"q", q}, {"eps_rank", field.primitive_rank()},
                       {"pattern", to_string(s.pattern)}}},
           {"field", to_json(field.descriptor())},
           {"S", s.s}});
    };
  });

  // verify
  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a property of a code file");
  verify->add_option("file", va.file, "Code file (JSON, text or square)")
      ->required();
  verify->add_option("--property", va.property, "Property")
      ->check(CLI::IsMember({"sc-bar", "sc", "fpc", "phf", "sc3bar-structural"}));
  verify->add_option("--t", va.t, "Strength");
  verify->add_option("--method", va.method, "oracle, structural or both")
      ->check(CLI::IsMember({"oracle", "structural", "both"}));
  verify->add_flag("--certify", va.certify,
                   "Compare a holding sc-bar result with the upper bounds");
  verify->callback([&] { action = [&] { return cmd_verify(g, va, out); }; });

  // bound
  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "List applicable bounds");
  bound->add_option("--q", ba.q, "Alphabet size")->required();
  bound->add_option("--n", ba.n, "Length");
  bound->add_option("--t", ba.t, "Strength");
  bound->callback([&] { action = [&] { return cmd_bound(g, ba, out); }; });

  // search
  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search exponent sets");
  search->require_subcommand(1);
  auto* s_df = search->add_subcommand("df", "Difference-family admissibility");
  s_df->add_option("--q", sa.q, "Field order, 1 mod 6")->required();
  s_df->add_option("--pattern", sa.patterns,
                   "Comma-separated patterns: all, mod3-nonzero, even, mod3-zero");
  s_df->add_option("--s", sa.s, "Extra custom exponent list");
  s_df->add_option("--eps", sa.eps, "first, all, N or A-B");
  s_df->add_option("--emit-codes", sa.emit_dir,
                   "Write and verify each admissible code in this directory");
  s_df->callback([&] { action = [&] { return cmd_search(g, sa, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (action) code = action();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (raise --budget to proceed)\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace sepcode::cli
