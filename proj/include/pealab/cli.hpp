#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pealab/pealab.hpp"

namespace pealab {

// Exit codes of the command-line surface: a pure function of the verdict.
enum ExitCode : int {
  kExitOk = 0,        // success / verdict true
  kExitVerdict = 1,   // verdict false or counterexample where none expected
  kExitInput = 2,     // malformed input, unknown names, contract violations
  kExitCapacity = 3,  // enumeration bound exceeded
};

struct CliResult {
  int code = 0;
  std::string out;
};

namespace cli_detail {

struct Bounds {
  int enumeration = kDefaultEnumBound;
  int subsets = kDefaultSubsetBound;
  int partitions = kDefaultPartitionBound;
};

inline int env_bound(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (!end || *end != '\0' || parsed < 1)
    throw input_error(std::string(name) + " must be a positive integer, got '" + value + "'");
  return static_cast<int>(parsed);
}

inline Bounds read_bounds() {
  Bounds b;
  b.enumeration = env_bound("PEALAB_ENUM_BOUND", b.enumeration);
  b.subsets = env_bound("PEALAB_DS_BOUND", b.subsets);
  b.partitions = env_bound("PEALAB_CON_BOUND", b.partitions);
  return b;
}

// A model argument names either a file on disk or a built-in model.
inline ModelDocument load_model(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw input_error("cannot open '" + arg + "'");
    std::ostringstream text;
    text << in.rdbuf();
    try {
      return parse_model(text.str());
    } catch (const input_error& e) {
      throw input_error(arg + ": " + e.what());
    }
  }
  if (arg == "ciungu5" || arg == "ciungu5.pbck") return to_document(ciungu5());
  throw input_error("cannot open '" + arg + "' (not a file or built-in model name)");
}

inline std::string witness_names(const std::vector<int>& witnesses,
                                 const std::vector<std::string>& names) {
  std::string out = "(";
  for (size_t i = 0; i < witnesses.size(); ++i) {
    if (i) out += ",";
    out += names[witnesses[i]];
  }
  return out + ")";
}

inline void print_report(std::ostream& out, const std::string& title, const AxiomReport& report,
                         const std::vector<std::string>& names) {
  if (report.verdict) {
    out << title << ": PASS\n";
    return;
  }
  out << title << ": FAIL (" << report.failures.size() << " violation"
      << (report.failures.size() == 1 ? "" : "s") << ")\n";
  for (const AxiomFailure& f : report.failures)
    out << "  " << f.axiom_id << " at " << witness_names(f.witnesses, names) << "\n";
}

inline std::string subset_names(std::uint32_t mask, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (size_t i = 0; i < names.size(); ++i) {
    if (!mask_contains(mask, static_cast<int>(i))) continue;
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

inline std::string partition_names(const EquivRelation& rel,
                                   const std::vector<std::string>& names) {
  std::string out;
  for (int c = 0; c < rel.classes(); ++c) {
    out += "{";
    bool first = true;
    for (int x = 0; x < rel.size(); ++x) {
      if (rel.class_of[x] != c) continue;
      if (!first) out += ",";
      out += names[x];
      first = false;
    }
    out += "}";
  }
  return out;
}

inline const char* yes_no(bool v) { return v ? "yes" : "no"; }

// ---- subcommand bodies -------------------------------------------------

inline int cmd_check(std::ostream& out, const std::string& file, bool jk, bool xii,
                     const Bounds&) {
  ModelDocument doc = load_model(file);
  out << "model: " << file << " (kind " << kind_name(doc.kind) << ", " << doc.size()
      << " element" << (doc.size() == 1 ? "" : "s") << ")\n";
  switch (doc.kind) {
    case ModelKind::pea: {
      FiniteAlgebra alg = to_algebra(doc);
      if (jk) {
        AxiomReport report = check_jk_axioms(alg);
        print_report(out, "original axioms F1'-F7'", report, doc.names);
        if (!report.verdict) return kExitVerdict;
        auto witness = collapse_witness(alg);
        if (witness) {
          out << "collapse: VIOLATED, sim(" << doc.names[witness->first] << ","
              << doc.names[witness->second] << ") differs from bsim\n";
          return kExitVerdict;
        }
        out << "collapse: sim and bsim coincide, as predicted\n";
        return kExitOk;
      }
      AxiomReport report = check_new_axioms(alg);
      print_report(out, "pseudo equality axioms F1-F7", report, doc.names);
      return report.verdict ? kExitOk : kExitVerdict;
    }
    case ModelKind::pbck: {
      if (jk) throw input_error("--jk applies to pea documents only");
      BckAlgebra alg = to_bck(doc);
      AxiomReport report = check_pbck(alg);
      print_report(out, "pseudo BCK-meet-semilattice axioms", report, doc.names);
      if (!report.verdict) return kExitVerdict;
      if (xii) {
        AxiomReport xr = check_condition_xii(alg);
        print_report(out, "condition (xii)", xr, doc.names);
        return xr.verdict ? kExitOk : kExitVerdict;
      }
      return kExitOk;
    }
    case ModelKind::hoop: {
      if (jk || xii) throw input_error("--jk/--xii do not apply to hoop documents");
      PseudoHoop hoop = to_hoop(doc);
      AxiomReport report = check_pseudo_hoop(hoop);
      print_report(out, "pseudo hoop axioms (i)-(v)", report, doc.names);
      return report.verdict ? kExitOk : kExitVerdict;
    }
  }
  return kExitInput;
}

inline int cmd_props(std::ostream& out, const std::string& file, const Bounds&) {
  ModelDocument doc = load_model(file);
  switch (doc.kind) {
    case ModelKind::pea: {
      FiniteAlgebra alg = to_algebra(doc);
      DerivedTables d = derive(alg);
      AxiomReport mono = check_monotonicity_laws(alg, d);
      AxiomReport laws = check_implication_laws(alg, d);
      print_report(out, "implication monotonicity (i)-(iv)", mono, doc.names);
      print_report(out, "implication laws (i)-(xiii)", laws, doc.names);
      return mono.verdict && laws.verdict ? kExitOk : kExitVerdict;
    }
    case ModelKind::pbck: {
      BckAlgebra alg = to_bck(doc);
      AxiomReport props = check_pbck_props(alg);
      print_report(out, "derived properties P1-P4", props, doc.names);
      bool ok = props.verdict;
      if (check_condition_xii(alg, /*fail_fast=*/true).verdict) {
        AxiomReport absorption = check_meet_absorption(alg);
        print_report(out, "meet absorption (under (xii))", absorption, doc.names);
        ok = ok && absorption.verdict;
      } else {
        out << "meet absorption: skipped (condition (xii) does not hold)\n";
      }
      return ok ? kExitOk : kExitVerdict;
    }
    case ModelKind::hoop:
      throw input_error("props applies to pea and pbck documents only");
  }
  return kExitInput;
}

inline int cmd_bridge(std::ostream& out, const std::string& file, const std::string& to,
                      bool roundtrip, const Bounds&) {
  ModelDocument doc = load_model(file);
  if (doc.kind == ModelKind::hoop)
    throw input_error("bridge applies to pea and pbck documents only");

  if (roundtrip) {
    if (doc.kind == ModelKind::pea) {
      FiniteAlgebra alg = to_algebra(doc);
      const bool fgf = roundtrip_FGF(alg);
      const bool invariant = is_invariant(alg);
      out << "F(G(F(A))) = F(A): " << yes_no(fgf) << "\n";
      out << "invariant (G(F(A)) = A): " << yes_no(invariant) << "\n";
      return fgf ? kExitOk : kExitVerdict;
    }
    BckAlgebra alg = to_bck(doc);
    try {
      const bool fg = roundtrip_FG(alg);
      out << "F(G(B)) = B: " << yes_no(fg) << "\n";
      return fg ? kExitOk : kExitVerdict;
    } catch (const xii_rejection& e) {
      out << "G rejected the model: " << e.what() << "\n";
      return kExitVerdict;
    }
  }

  if (to == "pbck") {
    if (doc.kind != ModelKind::pea) throw input_error("--to pbck expects a pea document");
    BckAlgebra image = functor_F(to_algebra(doc));
    out << emit_model(to_document(image));
    return kExitOk;
  }
  if (to == "pea") {
    if (doc.kind != ModelKind::pbck) throw input_error("--to pea expects a pbck document");
    try {
      FiniteAlgebra image = functor_G(to_bck(doc));
      out << emit_model(to_document(image));
      return kExitOk;
    } catch (const xii_rejection& e) {
      out << "G rejected the model: " << e.what() << "\n";
      out << "  witness " << witness_names({e.witness[0], e.witness[1], e.witness[2]}, doc.names)
          << " on the " << e.inequality << " side\n";
      return kExitVerdict;
    }
  }
  throw input_error("bridge needs either --to {pea|pbck} or --roundtrip");
}

inline DsFilter parse_filter(const std::string& name) {
  if (name == "all") return DsFilter::all;
  if (name == "closed") return DsFilter::closed;
  if (name == "normal") return DsFilter::normal;
  if (name == "normal_closed") return DsFilter::normal_closed;
  if (name == "commutative") return DsFilter::commutative;
  throw input_error("unknown filter '" + name +
                    "' (expected all, closed, normal, normal_closed or commutative)");
}

inline int cmd_ds(std::ostream& out, const std::string& file, const std::string& filter,
                  const Bounds& bounds) {
  ModelDocument doc = load_model(file);
  if (doc.kind != ModelKind::pea) throw input_error("ds applies to pea documents only");
  FiniteAlgebra alg = to_algebra(doc);
  if (!check_new_axioms(alg, /*fail_fast=*/true).verdict)
    throw input_error(file + ": not a valid pseudo equality algebra");
  std::vector<DeductiveSystem> systems = enumerate_ds(alg, parse_filter(filter), bounds.subsets);
  out << "deductive systems (filter=" << filter << "): " << systems.size() << "\n";
  for (const DeductiveSystem& ds : systems)
    out << subset_names(ds.members, doc.names) << " closed=" << yes_no(*ds.closed)
        << " normal=" << yes_no(*ds.normal) << " commutative=" << yes_no(*ds.commutative)
        << "\n";
  return kExitOk;
}

inline int cmd_con(std::ostream& out, const std::string& file, bool bijection,
                   const Bounds& bounds) {
  ModelDocument doc = load_model(file);
  if (doc.kind != ModelKind::pea) throw input_error("con applies to pea documents only");
  FiniteAlgebra alg = to_algebra(doc);
  if (!check_new_axioms(alg, /*fail_fast=*/true).verdict)
    throw input_error(file + ": not a valid pseudo equality algebra");
  std::vector<EquivRelation> congruences = enumerate_congruences(alg, bounds.partitions);
  out << "congruences: " << congruences.size() << "\n";
  for (const EquivRelation& rel : congruences) out << partition_names(rel, doc.names) << "\n";
  if (bijection) {
    const bool ok = bijection_check(alg, bounds.partitions);
    const size_t ncds = enumerate_ds(alg, DsFilter::normal_closed, bounds.subsets).size();
    out << "bijection with normal closed deductive systems: " << (ok ? "ok" : "BROKEN") << " ("
        << congruences.size() << " congruences, " << ncds << " normal closed systems)\n";
    return ok ? kExitOk : kExitVerdict;
  }
  return kExitOk;
}

inline int cmd_quotient(std::ostream& out, const std::string& file, const std::string& ds_arg,
                        const Bounds&) {
  ModelDocument doc = load_model(file);
  if (doc.kind != ModelKind::pea) throw input_error("quotient applies to pea documents only");
  FiniteAlgebra alg = to_algebra(doc);
  if (!check_new_axioms(alg, /*fail_fast=*/true).verdict)
    throw input_error(file + ": not a valid pseudo equality algebra");

  std::uint32_t mask = 0;
  std::string token;
  std::istringstream stream(ds_arg);
  while (std::getline(stream, token, ',')) {
    // trim surrounding whitespace
    size_t b = token.find_first_not_of(" \t");
    size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    token = token.substr(b, e - b + 1);
    auto it = std::find(doc.names.begin(), doc.names.end(), token);
    if (it == doc.names.end())
      throw input_error("unknown element '" + token + "' in --ds");
    mask |= std::uint32_t{1} << (it - doc.names.begin());
  }

  // Diagnose the precise predicate that fails, cheapest first.
  if (!mask_contains(mask, alg.top))
    throw input_error("--ds is not a deductive system: it does not contain the top element '" +
                      doc.names[alg.top] + "'");
  if (!is_upset(alg, mask))
    throw input_error("--ds is not a deductive system: it is not an upset");
  if (!is_sim_ds(alg, mask))
    throw input_error("--ds is not a deductive system: not closed under modus ponens");
  if (!is_normal(alg, mask))
    throw input_error("--ds is a deductive system but not normal; the quotient construction "
                      "needs a normal one");
  FiniteAlgebra q = quotient(alg, mask);
  out << emit_model(to_document(q));
  return kExitOk;
}

inline int cmd_hoop(std::ostream& out, const std::string& file, const Bounds&) {
  ModelDocument doc = load_model(file);
  if (doc.kind != ModelKind::hoop) throw input_error("hoop expects a hoop document");
  PseudoHoop hoop = to_hoop(doc);
  AxiomReport report = check_pseudo_hoop(hoop);
  if (!report.verdict) {
    print_report(out, "pseudo hoop axioms (i)-(v)", report, doc.names);
    return kExitVerdict;
  }
  out << emit_model(to_document(hoop_to_pea(hoop)));
  return kExitOk;
}

inline std::string model_extension(const std::string& kind) {
  if (kind == "pea") return ".pea";
  if (kind == "hoop") return ".hoop";
  return ".pbck";
}

template <class Model>
void persist_census(std::ostream& out, const Census<Model>& census,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ostringstream index;
  index << "# pealab census index\n";
  index << "kind " << census.signature << "\n";
  index << "n " << census.size << "\n";
  index << "up_to_iso " << (census.up_to_iso ? "yes" : "no") << "\n";
  index << "count " << census.count() << "\n";
  for (const auto& [predicate, hits] : census.predicate_hits) {
    index << "# predicate " << predicate << ": " << hits.size() << " hit"
          << (hits.size() == 1 ? "" : "s") << "\n";
    for (const std::string& hit : hits) index << "#   " << hit << "\n";
  }
  for (long long i = 0; i < census.count(); ++i) {
    std::ostringstream name;
    name << census.signature << "_n" << census.size << "_" << std::setw(3) << std::setfill('0')
         << i << model_extension(census.signature);
    index << "model " << name.str() << "\n";
    std::ofstream file(dir / name.str(), std::ios::binary);
    if (!file) throw input_error("cannot write '" + (dir / name.str()).string() + "'");
    file << emit_model(to_document(census.exemplars[i]));
  }
  std::ofstream index_file(dir / "index.txt", std::ios::binary);
  if (!index_file) throw input_error("cannot write '" + (dir / "index.txt").string() + "'");
  index_file << index.str();
  out << "persisted " << census.count() << " models to " << dir.string() << "\n";
}

inline int cmd_search(std::ostream& out, const std::string& kind, int n,
                      const std::string& predicate, const std::string& out_dir,
                      bool labeled, const Bounds& bounds) {
  // Bare predicate: hunt across sizes 1..n for the first witness.
  if (!predicate.empty() && kind.empty()) {
    std::optional<SearchWitness> witness = find_counterexample(predicate, n, bounds.enumeration);
    if (!witness) {
      out << "predicate " << predicate << ": no witness up to n=" << n << "\n";
      return kExitOk;
    }
    out << "predicate " << predicate << ": witness at n=" << witness->size << "\n";
    out << "  " << witness->description << "\n";
    if (witness->subset && witness->pea)
      out << "  subset " << subset_names(*witness->subset, witness->pea->names) << "\n";
    if (witness->pea) out << emit_model(to_document(*witness->pea));
    if (witness->bck) out << emit_model(to_document(*witness->bck));
    return predicate_expected_empty(predicate) ? kExitVerdict : kExitOk;
  }
  if (kind.empty()) throw input_error("search needs --kind, --predicate, or both");

  const bool up_to_iso = !labeled;
  auto summarize = [&](auto census_ptr) -> int {
    auto census = *census_ptr;  // local copy so predicate hits can be recorded
    out << "kind=" << census.signature << " n=" << n << " up_to_iso=" << yes_no(up_to_iso)
        << " count=" << census.count() << "\n";
    if (!predicate.empty()) {
      std::vector<std::string> hits = scan_census(census, predicate);
      out << "predicate " << predicate << ": " << hits.size() << " hit"
          << (hits.size() == 1 ? "" : "s") << " at n=" << n << "\n";
      for (const std::string& hit : hits) out << "  " << hit << "\n";
      if (!out_dir.empty()) persist_census(out, census, out_dir);
      return !hits.empty() && predicate_expected_empty(predicate) ? kExitVerdict : kExitOk;
    }
    if (!out_dir.empty()) persist_census(out, census, out_dir);
    return kExitOk;
  };

  if (kind == "pea") {
    if (!predicate.empty() && !predicate_on_pea_census(predicate))
      throw input_error("predicate '" + predicate +
                        "' does not apply to a pea census; use it without --kind");
    return summarize(enumerate_pea(n, up_to_iso, bounds.enumeration));
  }
  if (kind == "pbck_xii") {
    if (!predicate.empty())
      throw input_error("predicates do not apply to the pbck_xii census; "
                        "use --predicate without --kind");
    return summarize(enumerate_pbck(n, /*require_xii=*/true, up_to_iso, bounds.enumeration));
  }
  if (kind == "hoop") {
    if (!predicate.empty())
      throw input_error("predicates do not apply to the hoop census; "
                        "use --predicate without --kind");
    return summarize(enumerate_hoops(n, up_to_iso, bounds.enumeration));
  }
  throw input_error("unknown kind '" + kind + "' (expected pea, pbck_xii or hoop)");
}

inline int cmd_census(std::ostream& out, const std::string& dir_arg, const Bounds&) {
  namespace fs = std::filesystem;
  const fs::path dir(dir_arg);
  const fs::path index_path = dir / "index.txt";
  if (!fs::exists(index_path))
    throw input_error("no census index at '" + index_path.string() + "'");
  std::ifstream in(index_path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();

  std::string kind;
  int n = -1;
  bool up_to_iso = true;
  long long count = -1;
  std::vector<std::string> files;
  auto parse_int = [](const detail::SourceToken& tok) -> long long {
    char* end = nullptr;
    long long value = std::strtoll(tok.text.c_str(), &end, 10);
    if (!end || *end != '\0' || value < 0)
      detail::parse_fail(tok.line, tok.column,
                         "census index expected a non-negative integer, got '" + tok.text + "'");
    return value;
  };
  for (const auto& line : detail::tokenize_lines(text.str())) {
    const std::string& key = line.tokens[0].text;
    if (key == "kind" && line.tokens.size() == 2)
      kind = line.tokens[1].text;
    else if (key == "n" && line.tokens.size() == 2)
      n = static_cast<int>(parse_int(line.tokens[1]));
    else if (key == "up_to_iso" && line.tokens.size() == 2)
      up_to_iso = line.tokens[1].text == "yes";
    else if (key == "count" && line.tokens.size() == 2)
      count = parse_int(line.tokens[1]);
    else if (key == "model" && line.tokens.size() == 2)
      files.push_back(line.tokens[1].text);
    else
      throw input_error("malformed census index line " + std::to_string(line.line));
  }
  if (kind.empty() || n < 0 || count < 0)
    throw input_error("census index is missing kind/n/count");
  if (static_cast<long long>(files.size()) != count)
    throw input_error("census index lists " + std::to_string(files.size()) +
                      " models but declares count " + std::to_string(count));

  int failures = 0;
  std::set<std::vector<int>> keys;
  for (const std::string& name : files) {
    ModelDocument doc = load_model((dir / name).string());
    bool ok = true;
    std::string reason;
    std::vector<int> key;
    if (kind == "pea" || kind == "jk") {
      FiniteAlgebra alg = to_algebra(doc);
      AxiomReport report =
          kind == "pea" ? check_new_axioms(alg, true) : check_jk_axioms(alg, true);
      ok = report.verdict;
      if (!ok) reason = "axioms fail";
      key = canonical_key(alg);
    } else if (kind == "pbck" || kind == "pbck_xii") {
      BckAlgebra alg = to_bck(doc);
      ok = check_pbck(alg, true).verdict;
      if (!ok) reason = "axioms fail";
      if (ok && kind == "pbck_xii" && !check_condition_xii(alg, true).verdict) {
        ok = false;
        reason = "condition (xii) fails";
      }
      key = canonical_key(alg);
    } else if (kind == "hoop") {
      PseudoHoop hoop = to_hoop(doc);
      ok = check_pseudo_hoop(hoop, true).verdict;
      if (!ok) reason = "axioms fail";
      key = canonical_key(hoop);
    } else {
      throw input_error("census index has unknown kind '" + kind + "'");
    }
    if (ok && doc.size() != n) {
      ok = false;
      reason = "size differs from the index";
    }
    if (ok && up_to_iso && !keys.insert(key).second) {
      ok = false;
      reason = "isomorphic to an earlier exemplar";
    }
    if (ok) {
      out << "ok " << name << "\n";
    } else {
      out << "FAIL " << name << ": " << reason << "\n";
      ++failures;
    }
  }
  out << "census " << dir_arg << ": " << (count - failures) << "/" << count
      << " exemplars verified (kind " << kind << ", n=" << n << ")\n";
  return failures == 0 ? kExitOk : kExitVerdict;
}

}  // namespace cli_detail

// The whole command-line surface as a pure function from arguments to an
// exit code plus report text; the binary simply prints the text.
inline CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  int code = kExitOk;
  try {
    cli_detail::Bounds bounds = cli_detail::read_bounds();

    CLI::App app{"finite-model workbench for pseudo equality algebras"};
    app.require_subcommand(1);

    std::string file, filter = "all", to, ds_arg, kind, predicate, out_dir;
    int n = 0;
    bool jk = false, xii = false, roundtrip = false, bijection = false, labeled = false;

    CLI::App* check = app.add_subcommand("check", "verify the axioms of a model file");
    check->add_option("file", file)->required();
    check->add_flag("--jk", jk, "check the original axiom system and the collapse");
    check->add_flag("--xii", xii, "also check condition (xii) on a pbck model");

    CLI::App* props = app.add_subcommand("props", "verify derived-operation property suites");
    props->add_option("file", file)->required();

    CLI::App* bridge = app.add_subcommand("bridge", "translate between pea and pbck models");
    bridge->add_option("file", file)->required();
    bridge->add_option("--to", to, "target kind (pea or pbck)");
    bridge->add_flag("--roundtrip", roundtrip, "verify the round-trip theorems");

    CLI::App* ds = app.add_subcommand("ds", "enumerate deductive systems");
    ds->add_option("file", file)->required();
    ds->add_option("--filter", filter,
                   "all, closed, normal, normal_closed or commutative (default all)");

    CLI::App* con = app.add_subcommand("con", "enumerate congruences");
    con->add_option("file", file)->required();
    con->add_flag("--bijection", bijection,
                  "verify the bijection with normal closed deductive systems");

    CLI::App* quot = app.add_subcommand("quotient", "quotient by a normal deductive system");
    quot->add_option("file", file)->required();
    quot->add_option("--ds", ds_arg, "comma-separated element names")->required();

    CLI::App* hoop = app.add_subcommand("hoop", "turn a pseudo hoop into a pea model");
    hoop->add_option("file", file)->required();

    CLI::App* search = app.add_subcommand("search", "enumerate models or hunt counterexamples");
    search->add_option("--kind", kind, "pea, pbck_xii or hoop");
    search->add_option("--n", n, "model size")->required();
    search->add_option("--predicate", predicate, "counterexample predicate to hunt");
    search->add_option("--out", out_dir, "persist the census into this directory");
    search->add_flag("--labeled", labeled, "count labeled models instead of up-to-iso");

    CLI::App* census = app.add_subcommand("census", "re-verify a persisted census directory");
    census->add_option("dir", file)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
      app.parse(argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return {kExitOk, out.str()};
    } catch (const CLI::ParseError& e) {
      out << "argument error: " << e.what() << "\n";
      return {kExitInput, out.str()};
    }

    if (check->parsed()) code = cli_detail::cmd_check(out, file, jk, xii, bounds);
    else if (props->parsed()) code = cli_detail::cmd_props(out, file, bounds);
    else if (bridge->parsed()) code = cli_detail::cmd_bridge(out, file, to, roundtrip, bounds);
    else if (ds->parsed()) code = cli_detail::cmd_ds(out, file, filter, bounds);
    else if (con->parsed()) code = cli_detail::cmd_con(out, file, bijection, bounds);
    else if (quot->parsed()) code = cli_detail::cmd_quotient(out, file, ds_arg, bounds);
    else if (hoop->parsed()) code = cli_detail::cmd_hoop(out, file, bounds);
    else if (search->parsed())
      code = cli_detail::cmd_search(out, kind, n, predicate, out_dir, labeled, bounds);
    else if (census->parsed()) code = cli_detail::cmd_census(out, file, bounds);
  } catch (const xii_rejection& e) {
    out << "rejected: " << e.what() << "\n";
    code = kExitVerdict;
  } catch (const theorem_violation& e) {
    out << "THEOREM VIOLATION: " << e.what() << "\n";
    out << "this should be impossible; the implementation or the mathematics is wrong\n";
    code = kExitVerdict;
  } catch (const capacity_error& e) {
    out << "capacity error: " << e.what() << "\n";
    code = kExitCapacity;
  } catch (const contract_error& e) {
    out << "contract error: " << e.what() << "\n";
    code = kExitInput;
  } catch (const input_error& e) {
    out << "input error: " << e.what() << "\n";
    code = kExitInput;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    code = kExitInput;
  }
  return {code, out.str()};
}

}  // namespace pealab
