#include "qseq4/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qseq4/correlate.hpp"
#include "qseq4/error.hpp"
#include "qseq4/fouradic.hpp"
#include "qseq4/gaussalg.hpp"
#include "qseq4/interleave.hpp"
#include "qseq4/seqgen.hpp"

namespace qseq4 {

namespace {

using Row = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

const std::vector<std::string> kReportColumns = {"family", "params",  "assignment", "e", "rmax2",
                                                 "d",      "predicted", "verdict",  "c4"};

struct Options {
  std::string family;
  std::string p;
  std::string k;
  std::string n;
  std::string poly;
  std::optional<unsigned> decimation;
  std::optional<unsigned> shift;
  std::string assign;
  std::string e;
  std::string format;
  std::string output;
  std::string input;
  std::string emit;
  std::optional<unsigned> t;
  std::string of;
  std::string with;
  std::vector<unsigned> sets;
  bool all_e = false;
  bool allow_nonadmissible = false;
};

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw Error(ErrorCode::ParseError, "unknown output format '" + text + "'");
}

Format resolve_format(const Options& o) {
  if (!o.format.empty()) return parse_format(o.format);
  if (const char* env = std::getenv("QSEQ4_FORMAT"); env != nullptr && *env != '\0') {
    return parse_format(env);
  }
  return Format::Text;
}

std::string cell(const Row& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_table(std::ostream& os, const std::vector<std::string>& columns,
                const std::vector<Row>& rows, Format format) {
  if (format == Format::Json) {
    Row array = Row::array();
    for (const auto& r : rows) array.push_back(r);
    os << array.dump(2) << '\n';
    return;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& c : columns) line.push_back(r.contains(c) ? cell(r.at(c)) : "");
    cells.push_back(std::move(line));
  }
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i) os << (i ? "," : "") << csv_escape(line[i]);
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    width[i] = columns[i].size();
    for (const auto& line : cells) width[i] = std::max(width[i], line[i].size());
  }
  const auto print_line = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
    }
    os << '\n';
  };
  print_line(columns);
  for (const auto& line : cells) print_line(line);
}

unsigned parse_uint(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::ParseError, "bad value '" + text + "' for " + what);
  }
  return static_cast<unsigned>(std::stoul(text));
}

std::uint32_t parse_poly(const std::string& text) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used, 0);
    if (used != text.size() || v > 0xFFFFFFFFUL) throw std::invalid_argument(text);
    return static_cast<std::uint32_t>(v);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad polynomial '" + text + "'");
  }
}

FamilyKind parse_kind(const std::string& name) {
  if (name == "twin-prime") return FamilyKind::TwinPrime;
  if (name == "gmw") return FamilyKind::Gmw;
  if (name == "cyclotomic") return FamilyKind::Cyclotomic;
  if (name.empty()) throw Error(ErrorCode::ParseError, "--family is required");
  throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
}

const std::string& param_text(const Options& o, FamilyKind kind, std::string* flag) {
  switch (kind) {
    case FamilyKind::TwinPrime:
      *flag = "--p";
      return o.p;
    case FamilyKind::Gmw:
      *flag = "--k";
      return o.k;
    case FamilyKind::Cyclotomic:
      break;
  }
  *flag = "--n";
  return o.n;
}

FamilyParams make_family(const Options& o, FamilyKind kind, unsigned value) {
  FamilyParams family;
  switch (kind) {
    case FamilyKind::TwinPrime:
      family = TwinPrimeParams{value};
      break;
    case FamilyKind::Gmw: {
      GmwConfig config;
      if (o.poly.empty()) {
        config = default_gmw_config(value);
      } else {
        config.polynomial = parse_poly(o.poly);
      }
      if (o.decimation) config.decimation = *o.decimation;
      if (o.shift) config.shift = *o.shift;
      family = GmwParams{value, config};
      break;
    }
    case FamilyKind::Cyclotomic:
      family = CyclotomicParams{value};
      break;
  }
  validate_family(family);
  return family;
}

// "a..b" keeps the valid parameters of the range; a single value or a comma
// list must be valid throughout.
std::vector<FamilyParams> families_from(const Options& o, bool allow_ranges) {
  const FamilyKind kind = parse_kind(o.family);
  std::string flag;
  const std::string& text = param_text(o, kind, &flag);
  if (text.empty()) {
    throw Error(ErrorCode::ParseError, family_name(kind) + " family needs " + flag);
  }
  std::vector<FamilyParams> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    if (!allow_ranges) throw Error(ErrorCode::ParseError, flag + " takes a single value here");
    const unsigned lo = parse_uint(text.substr(0, dots), flag);
    const unsigned hi = parse_uint(text.substr(dots + 2), flag);
    for (unsigned v = lo; v <= hi; ++v) {
      try {
        out.push_back(make_family(o, kind, v));
      } catch (const Error&) {
      }
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(make_family(o, kind, parse_uint(item, flag)));
  }
  if (!allow_ranges && out.size() != 1) {
    throw Error(ErrorCode::ParseError, flag + " takes a single value here");
  }
  return out;
}

FamilyParams single_family(const Options& o) { return families_from(o, false).front(); }

std::vector<std::pair<std::string, BinarySequence>> named_bases(const FamilyParams& family) {
  std::vector<std::pair<std::string, BinarySequence>> out;
  if (kind_of(family) == FamilyKind::Cyclotomic) {
    const auto structure = cyclotomic_structure(base_period(family));
    for (unsigned i = 1; i <= 6; ++i) {
      out.emplace_back("t" + std::to_string(i), cyclo_sequence(structure, i));
    }
  } else {
    auto pair = sequence_pair(family);
    out.emplace_back("t0", std::move(pair.base));
    out.emplace_back("t1", std::move(pair.modified));
  }
  return out;
}

ConstructionSpec spec_from(const Options& o) {
  if (o.assign.empty() || o.e.empty()) {
    throw Error(ErrorCode::ParseError, "a construction needs both --assign and --e");
  }
  return make_spec(single_family(o), parse_assignment(o.assign), parse_e(o.e));
}

// Symbols may wrap across lines; all whitespace is dropped.
std::string read_sequence_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::string text, chunk;
  while (in >> chunk) text += chunk;
  return text;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string prediction_text(const Prediction& p) {
  switch (p.kind) {
    case PredictionKind::Exact:
      return to_decimal(p.value);
    case PredictionKind::UpperBound:
      return "<=" + to_decimal(p.value);
    case PredictionKind::None:
      break;
  }
  return "";
}

Row spec_row(const ConstructionSpec& spec) {
  Row row;
  row["family"] = family_name(kind_of(spec.family));
  row["params"] = family_param_string(spec.family);
  row["assignment"] = assignment_name(spec.assignment);
  row["e"] = e_string(spec.e);
  return row;
}

Row report_row(const ComplexityReport& r) {
  Row row = spec_row(r.spec);
  row["rmax2"] = r.rmax2;
  row["d"] = to_decimal(r.complexity.d);
  row["predicted"] = prediction_text(r.prediction);
  row["verdict"] = verdict_name(r.verdict);
  row["c4"] = fixed6(r.complexity.c4());
  return row;
}


int cmd_gen(const Options& o, std::ostream& os) {
  const FamilyParams family = single_family(o);
  std::vector<Row> rows;
  const auto add = [&](const std::string& name, const std::string& value) {
    Row r;
    r["name"] = name;
    r["value"] = value;
    rows.push_back(std::move(r));
  };
  for (const auto& [name, seq] : named_bases(family)) add(name, seq.to_string());
  if (!o.assign.empty() || !o.e.empty()) {
    const ConstructionSpec spec = spec_from(o);
    const auto ab = build_ab(spec);
    add("a", ab.a.to_string());
    add("b", ab.b.to_string());
    add("s", gray_map(ab.a, ab.b).to_string());
  }
  std::string wanted = o.emit;
  if (o.t) wanted = "t" + std::to_string(*o.t);
  if (!wanted.empty()) {
    for (const auto& r : rows) {
      if (r["name"] == wanted) {
        os << r["value"].get<std::string>() << '\n';
        return kExitOk;
      }
    }
    throw Error(ErrorCode::InvalidIndex, "nothing named '" + wanted + "' for this family");
  }
  emit_table(os, {"name", "value"}, rows, resolve_format(o));
  return kExitOk;
}

int cmd_corr(const Options& o, std::ostream& os) {
  const Format format = resolve_format(o);
  std::vector<Row> rows;
  const auto quaternary = [&](const QuaternarySequence& s) {
    for (std::size_t tau = 0; tau < s.period(); ++tau) {
      const auto v = quaternary_autocorr(s, tau);
      Row r;
      r["tau"] = tau;
      r["re"] = v.re;
      r["im"] = v.im;
      rows.push_back(std::move(r));
    }
    emit_table(os, {"tau", "re", "im"}, rows, format);
    return kExitOk;
  };
  if (!o.input.empty()) return quaternary(QuaternarySequence::parse(read_sequence_file(o.input)));

  const std::string of = o.of.empty() ? "s" : o.of;
  if (of == "s") return quaternary(build_s(spec_from(o)));

  std::vector<std::pair<std::string, BinarySequence>> pool = named_bases(single_family(o));
  if (!o.assign.empty() || !o.e.empty()) {
    auto ab = build_ab(spec_from(o));
    pool.emplace_back("a", std::move(ab.a));
    pool.emplace_back("b", std::move(ab.b));
  }
  const auto lookup = [&](const std::string& name) -> const BinarySequence& {
    for (const auto& [key, seq] : pool) {
      if (key == name) return seq;
    }
    throw Error(ErrorCode::InvalidIndex, "nothing named '" + name + "' for this family");
  };
  const BinarySequence& s = lookup(of);
  const BinarySequence& t = lookup(o.with.empty() ? of : o.with);
  for (std::size_t tau = 0; tau < s.period(); ++tau) {
    Row r;
    r["tau"] = tau;
    r["value"] = binary_crosscorr(s, t, tau);
    rows.push_back(std::move(r));
  }
  emit_table(os, {"tau", "value"}, rows, format);
  return kExitOk;
}

int cmd_complexity(const Options& o, std::ostream& os) {
  const QuaternarySequence s = o.input.empty()
                                   ? build_s(spec_from(o))
                                   : QuaternarySequence::parse(read_sequence_file(o.input));
  const Complexity c = complexity(s);
  Row r;
  r["period"] = c.period;
  r["d"] = to_decimal(c.d);
  r["c4"] = fixed6(c.c4());
  r["exceeds_threshold"] = exceeds_security_threshold(c);
  emit_table(os, {"period", "d", "c4", "exceeds_threshold"}, {r}, resolve_format(o));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& os, std::ostream& err) {
  const ConstructionSpec spec = spec_from(o);
  const ComplexityReport report =
      o.input.empty() ? verify_theorem(spec)
                      : verify_sequence(spec, QuaternarySequence::parse(read_sequence_file(o.input)));
  if (report.verdict == Verdict::NoPrediction && !o.allow_nonadmissible) {
    err << "error: no-prediction: " << assignment_name(spec.assignment) << " with e="
        << e_string(spec.e) << " is outside every admissible set (use --allow-nonadmissible)\n";
    return kExitUsage;
  }
  emit_table(os, kReportColumns, {report_row(report)}, resolve_format(o));
  return report.verdict == Verdict::Mismatch ? kExitMismatch : kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& os) {
  const Format format = resolve_format(o);
  const auto families = families_from(o, true);
  std::vector<Row> rows;
  bool failed = false;
  for (const auto& family : families) {
    const FamilyKind kind = kind_of(family);
    std::vector<unsigned> set_ids = o.sets;
    if (set_ids.empty()) {
      for (TupleSet id : tuple_sets_for(kind)) set_ids.push_back(static_cast<unsigned>(id));
    }
    for (unsigned id : set_ids) {
      const AdmissibleSet set = admissible_tuples(kind, id);
      std::vector<EVector> es = o.all_e ? e_vectors_with_parity(0) : e_vectors_with_parity(set.e_parity);
      if (o.all_e) {
        const auto odd = e_vectors_with_parity(1);
        es.insert(es.end(), odd.begin(), odd.end());
        std::sort(es.begin(), es.end());
      }
      for (const Assignment& tuple : set.tuples) {
        for (const EVector& e : es) {
          const ConstructionSpec spec{family, tuple, e};
          try {
            const ComplexityReport report = verify_theorem(spec);
            failed |= report.verdict == Verdict::Mismatch;
            rows.push_back(report_row(report));
          } catch (const Error& ex) {
            failed = true;
            Row row = spec_row(spec);
            row["verdict"] = "error: " + std::string(error_code_name(ex.code()));
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  emit_table(os, kReportColumns, rows, format);
  return failed ? kExitMismatch : kExitOk;
}

int cmd_identities(const Options& o, std::ostream& os) {
  Options cyc = o;
  cyc.family = "cyclotomic";
  if (cyc.n.empty()) cyc.n = "13,29,53";
  std::vector<Row> rows;
  bool failed = false;
  for (const auto& family : families_from(cyc, true)) {
    const auto structure = cyclotomic_structure(base_period(family));
    const auto periods = gauss_periods(structure);
    for (const auto& check : check_identity_suite(structure, periods)) {
      Row r;
      r["n"] = structure.n;
      r["identity"] = check.identity;
      r["gamma"] = check.gamma < 0 ? Row() : Row(check.gamma);
      r["mu"] = check.mu < 0 ? Row() : Row(check.mu);
      r["pass"] = check.pass;
      failed |= !check.pass;
      rows.push_back(std::move(r));
    }
  }
  emit_table(os, {"n", "identity", "gamma", "mu", "pass"}, rows, resolve_format(o));
  return failed ? kExitMismatch : kExitOk;
}

void add_family_options(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "twin-prime, gmw or cyclotomic");
  sub->add_option("--p", o.p, "twin-prime parameter p");
  sub->add_option("--k", o.k, "GMW parameter k (period 2^(2k)-1)");
  sub->add_option("--n", o.n, "cyclotomic prime n");
  sub->add_option("--poly", o.poly, "GMW primitive polynomial, e.g. 0x43");
  sub->add_option("--r", o.decimation, "GMW decimation exponent");
  sub->add_option("--shift", o.shift, "GMW cyclic shift");
}

void add_spec_options(CLI::App* sub, Options& o) {
  sub->add_option("--assign", o.assign, "roles of c0..c3, e.g. t0t1t0t1");
  sub->add_option("--e", o.e, "e-vector, e.g. 100");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Interleaved quaternary sequences and their 4-adic complexity", "qseq4"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text, json or csv (default: $QSEQ4_FORMAT or text)");
  app.add_option("-o,--output", o.output, "write to a file instead of standard output");
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "print base sequences and the constructed a, b, s");
  add_family_options(gen, o);
  add_spec_options(gen, o);
  gen->add_option("--t", o.t, "print only the base sequence with this index");
  gen->add_option("--emit", o.emit, "print only one named sequence (t0, a, s, ...)");

  auto* corr = app.add_subcommand("corr", "periodic correlation profile");
  add_family_options(corr, o);
  add_spec_options(corr, o);
  corr->add_option("--of", o.of, "sequence name (default s)");
  corr->add_option("--with", o.with, "second sequence for a cross-correlation");
  corr->add_option("--input", o.input, "quaternary sequence file");

  auto* cx = app.add_subcommand("complexity", "4-adic complexity of a constructed or given sequence");
  add_family_options(cx, o);
  add_spec_options(cx, o);
  cx->add_option("--input", o.input, "quaternary sequence file");

  auto* verify = app.add_subcommand("verify", "compare d with the closed-form prediction");
  add_family_options(verify, o);
  add_spec_options(verify, o);
  verify->add_option("--input", o.input, "quaternary sequence file to verify instead of building s");
  verify->add_flag("--allow-nonadmissible", o.allow_nonadmissible,
                   "report specs outside the admissible sets instead of failing");

  auto* sweep = app.add_subcommand("sweep", "verify every admissible spec over parameter ranges");
  add_family_options(sweep, o);
  sweep->add_option("--set", o.sets, "tuple sets to include (1 for pairs; 7, 8, 9 cyclotomic)");
  sweep->add_flag("--all-e", o.all_e, "use all eight e-vectors, not only the admissible parity");

  auto* ids = app.add_subcommand("identities", "Gauss-period identity suite");
  ids->add_option("--n", o.n, "cyclotomic primes (list or range; default 13,29,53)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw Error(ErrorCode::ParseError, "cannot write " + o.output);
    }
    std::ostream& os = o.output.empty() ? out : file;
    if (gen->parsed()) return cmd_gen(o, os);
    if (corr->parsed()) return cmd_corr(o, os);
    if (cx->parsed()) return cmd_complexity(o, os);
    if (verify->parsed()) return cmd_verify(o, os, err);
    if (sweep->parsed()) return cmd_sweep(o, os);
    return cmd_identities(o, os);
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace qseq4
