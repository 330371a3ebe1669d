#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "torusquant/representations.hpp"
#include "torusquant/verify.hpp"

namespace tq::cli {

namespace {

using json = nlohmann::ordered_json;

struct JobSpec {
  int g = 1;
  std::int64_t k = 2;
  std::vector<std::string> lagrangians;
  std::vector<int> lifts;
  std::string base;
  std::string gram;
  std::uint64_t seed = verify::Options{}.seed;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string suite = "all";
  std::string generator;
  std::string param;
  std::string matrix;
  int q = 4;
  bool details = false;
};

// ---------------------------------------------------------------------------
// Input parsing

std::int64_t parse_int(const std::string& tok) {
  std::int64_t v = 0;
  const char* end = tok.data() + tok.size();
  const char* start = tok.data() + (!tok.empty() && tok[0] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(start, end, v);
  if (ec != std::errc() || ptr != end || start == end) throw Error(ErrorCode::ParseError, "not an integer: '" + tok + "'");
  return v;
}

// "a b c; d e f" (commas also separate entries)
IntMatrix parse_rows(const std::string& text, int cols) {
  std::vector<IntVector> rows;
  std::stringstream all(text);
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::replace(row_text.begin(), row_text.end(), ',', ' ');
    std::stringstream rs(row_text);
    IntVector row;
    std::string tok;
    while (rs >> tok) row.push_back(parse_int(tok));
    if (row.empty()) continue;
    if (static_cast<int>(row.size()) != cols)
      throw Error(ErrorCode::DimensionMismatch,
                  "row '" + row_text + "' has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
    rows.push_back(row);
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix '" + text + "'");
  return IntMatrix::from_rows(rows, cols);
}

SymplecticSpace space_of(const JobSpec& job) {
  if (job.g < 1) throw Error(ErrorCode::DimensionMismatch, "g must be positive");
  if (job.gram.empty()) return SymplecticSpace::standard(job.g);
  const IntMatrix m = parse_rows(job.gram, 2 * job.g);
  if (m.rows() != 2 * job.g) throw Error(ErrorCode::DimensionMismatch, "gram must be 2g x 2g");
  return SymplecticSpace::from_gram(m);
}

Lagrangian parse_lagrangian(const SymplecticSpace& s, const std::string& text, bool full) {
  Lagrangian l = Lagrangian::from_rows(s, parse_rows(text, s.dim()));
  if (full && !l.is_full()) throw Error(ErrorCode::DimensionMismatch, "a polarization needs g independent rows");
  return l;
}

std::vector<Lagrangian> lagrangians(const JobSpec& job, const SymplecticSpace& s, std::size_t count) {
  if (job.lagrangians.size() != count)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(count) + " --lagrangian values, got " +
                                                  std::to_string(job.lagrangians.size()));
  std::vector<Lagrangian> out;
  for (const std::string& t : job.lagrangians) out.push_back(parse_lagrangian(s, t, true));
  return out;
}

Lagrangian default_lagrangian(const SymplecticSpace& s) {
  IntMatrix rows(s.g, s.dim());
  for (int i = 0; i < s.g; ++i) rows(i, i) = 1;
  return Lagrangian::saturated(s, rows);
}

// ---------------------------------------------------------------------------
// Output

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

json frame_json(const AdaptedBasis& f) { return {{"W", int_matrix_json(f.W)}, {"Wperp", int_matrix_json(f.Wperp)}}; }

json complex_matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json phase_sum_json(const PhaseSum& p) {
  json terms = json::array();
  for (const PhaseSum::Term& t : p.terms())
    terms.push_back({{"t", rational_string(t.phase.exponent())}, {"c", rational_string(t.coeff)}});
  return {{"amp2", rational_string(p.amp2())}, {"terms", terms}};
}

json intertwiner_json(const Intertwiner& f) {
  json doc;
  doc["meta"] = {{"g", f.source.g()},
                 {"k", f.source.k()},
                 {"frames", {{"source", frame_json(f.source.frame())}, {"target", frame_json(f.target.frame())}}},
                 {"exact_omitted", f.exact_omitted}};
  doc["matrix"] = complex_matrix_json(f.matrix);
  if (f.exact) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < f.matrix.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < f.matrix.cols(); ++c) row.push_back(phase_sum_json(f.exact_entry(r, c)));
      rows.push_back(row);
    }
    doc["exact"] = rows;
  } else {
    doc["exact"] = nullptr;
  }
  return doc;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool is_flat(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
}

// Scalars and short vectors such as [re, im] keep a matrix row on one line.
bool is_inline(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive() || (e.is_array() && is_flat(e)); });
}

// Like json::dump(2) but floats carry 17 significant digits and matrix rows stay on one line.
void write_json(const json& j, std::ostream& os, int level) {
  const std::string pad(static_cast<std::size_t>(2 * level), ' ');
  const std::string inner(static_cast<std::size_t>(2 * level + 2), ' ');
  switch (j.type()) {
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    case json::value_t::array:
      if (j.empty() || is_inline(j)) {
        os << '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(j[i], os, level + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        os << inner;
        write_json(j[i], os, level + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << ']';
      return;
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        os << inner << json(it.key()).dump() << ": ";
        write_json(it.value(), os, level + 1);
        os << (i + 1 < j.size() ? ",\n" : "\n");
      }
      os << pad << '}';
      return;
    }
    default:
      os << j.dump();
  }
}

void emit_json(const json& j, std::ostream& out) {
  write_json(j, out, 0);
  out << '\n';
}

void text_int_matrix(std::ostream& out, const std::string& name, const IntMatrix& m) {
  out << name << ":\n";
  for (int r = 0; r < m.rows(); ++r) {
    out << " ";
    for (int c = 0; c < m.cols(); ++c) out << ' ' << std::setw(4) << m(r, c);
    out << '\n';
  }
}

void text_complex_matrix(std::ostream& out, const ComplexMatrix& m) {
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "  %+.6f%+.6fi", m(r, c).real(), m(r, c).imag());
      out << buf;
    }
    out << '\n';
  }
}

void text_frame(std::ostream& out, const std::string& label, const AdaptedBasis& f) {
  text_int_matrix(out, label + " W", f.W);
  text_int_matrix(out, label + " Wperp", f.Wperp);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_basis(const JobSpec& job, std::ostream& out) {
  const SymplecticSpace s = space_of(job);
  if (job.lagrangians.size() > 1) throw Error(ErrorCode::DimensionMismatch, "basis takes at most one --lagrangian");
  std::optional<Lagrangian> l;
  if (!job.lagrangians.empty()) l = parse_lagrangian(s, job.lagrangians[0], false);
  const AdaptedBasis b = l ? adapted_basis(*l) : adapted_basis(s);
  const bool valid = b.is_valid();
  const bool spans = !l || Lagrangian::saturated(s, b.W.row_range(0, l->rank())) == *l;
  const bool unimodular = std::abs(det(b.stack())) == 1;
  if (job.format == "text") {
    text_frame(out, "basis", b);
    out << "valid: " << std::boolalpha << valid << "\nspans_lagrangian: " << spans << "\nunimodular: " << unimodular << '\n';
  } else {
    json doc = frame_json(b);
    doc["meta"] = {{"g", s.g}};
    doc["invariants"] = {{"valid", valid}, {"spans_lagrangian", spans}, {"unimodular", unimodular}};
    emit_json(doc, out);
  }
  return 0;
}

HilbertSpace canonical(const Lagrangian& l, std::int64_t k) { return HilbertSpace::make(Polarization::canonical(l), k); }

int cmd_bks(const JobSpec& job, std::ostream& out) {
  const SymplecticSpace s = space_of(job);
  const std::vector<Lagrangian> ls = lagrangians(job, s, 2);
  Intertwiner f = job.lifts.empty() ? bks_matrix(canonical(ls[0], job.k), canonical(ls[1], job.k)) : [&] {
    if (job.lifts.size() != 2) throw Error(ErrorCode::DimensionMismatch, "bks takes two --lift values");
    if (job.base.empty()) throw Error(ErrorCode::InvalidLift, "--lift needs --base");
    const Lagrangian base = parse_lagrangian(s, job.base, true);
    return corrected_intertwiner(LagLift::make(base, ls[0], job.lifts[0]), LagLift::make(base, ls[1], job.lifts[1]), job.k);
  }();
  if (job.format == "text") {
    out << "g = " << s.g << ", k = " << job.k << (job.lifts.empty() ? "" : ", corrected") << '\n';
    text_frame(out, "source", f.source.frame());
    text_frame(out, "target", f.target.frame());
    out << "matrix:\n";
    text_complex_matrix(out, f.matrix);
  } else {
    json doc = intertwiner_json(f);
    if (!job.lifts.empty()) doc["meta"]["lifts"] = job.lifts;
    emit_json(doc, out);
  }
  return 0;
}

int cmd_maslov(const JobSpec& job, std::ostream& out) {
  const SymplecticSpace s = space_of(job);
  const std::vector<Lagrangian> ls = lagrangians(job, s, 3);
  const int t = tau(ls[0], ls[1], ls[2]);
  json doc;
  doc["meta"] = {{"g", s.g}};
  doc["tau"] = t;
  if (!job.lifts.empty()) {
    if (job.lifts.size() != 3) throw Error(ErrorCode::DimensionMismatch, "maslov takes three --lift values");
    if (job.base.empty()) throw Error(ErrorCode::InvalidLift, "--lift needs --base");
    const Lagrangian base = parse_lagrangian(s, job.base, true);
    std::vector<LagLift> lifts;
    for (std::size_t i = 0; i < 3; ++i) lifts.push_back(LagLift::make(base, ls[i], job.lifts[i], job.q));
    doc["meta"]["q"] = job.q;
    doc["mu"] = {{"12", mu(lifts[0], lifts[1], job.q)}, {"23", mu(lifts[1], lifts[2], job.q)}, {"31", mu(lifts[2], lifts[0], job.q)}};
  }
  if (job.format == "text") {
    out << "tau = " << t << '\n';
    if (doc.contains("mu"))
      for (const auto& [pair, value] : doc["mu"].items()) out << "mu(" << pair[0] << "," << pair[1] << ") = " << value.get<int>() << " mod " << 2 * job.q << '\n';
  } else {
    emit_json(doc, out);
  }
  return 0;
}

MpKind parse_kind(const std::string& name) {
  if (name == "alpha") return MpKind::Alpha;
  if (name == "beta") return MpKind::Beta;
  if (name == "gamma") return MpKind::Gamma;
  if (name == "gamma-epsilon") return MpKind::GammaEpsilon;
  if (name == "epsilon") return MpKind::Epsilon;
  throw Error(ErrorCode::ParseError, "unknown generator '" + name + "'");
}

int cmd_rep(const JobSpec& job, std::ostream& out) {
  const SymplecticSpace s = space_of(job);
  if (job.lagrangians.size() > 1) throw Error(ErrorCode::DimensionMismatch, "rep takes at most one --lagrangian");
  const Lagrangian l = job.lagrangians.empty() ? default_lagrangian(s) : parse_lagrangian(s, job.lagrangians[0], true);
  const HilbertSpace h = canonical(l, job.k);
  json doc;
  doc["meta"] = {{"g", s.g}, {"k", job.k}, {"frames", {{"polarization", frame_json(h.frame())}}}};
  ComplexMatrix m;
  if (!job.matrix.empty()) {
    if (!job.generator.empty()) throw Error(ErrorCode::ParseError, "give either --generator or --matrix");
    const IntMatrix b = parse_rows(job.matrix, s.dim());
    if (b.rows() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "--matrix must be 2g x 2g");
    m = u_sp(SpElement::make(s, b), h);
    doc["meta"]["projective"] = true;
  } else {
    if (job.generator.empty()) throw Error(ErrorCode::ParseError, "rep needs --generator or --matrix");
    const MpKind kind = parse_kind(job.generator);
    IntMatrix param;
    if (kind == MpKind::Alpha || kind == MpKind::Beta) {
      if (job.param.empty()) throw Error(ErrorCode::ParseError, "--param is required for " + job.generator);
      param = parse_rows(job.param, s.g);
      if (param.rows() != s.g) throw Error(ErrorCode::DimensionMismatch, "--param must be g x g");
    }
    const MpElement x = mp_generator(h.frame(), kind, param);
    m = u_mp(x, h);
    doc["meta"]["generator"] = job.generator;
    doc["meta"]["z"] = x.z;
    doc["meta"]["sp"] = int_matrix_json(x.b.matrix());
  }
  doc["matrix"] = complex_matrix_json(m);
  if (job.format == "text") {
    out << "g = " << s.g << ", k = " << job.k << '\n';
    text_frame(out, "polarization", h.frame());
    if (doc["meta"].contains("z")) out << "z = " << doc["meta"]["z"].get<int>() << '\n';
    out << "matrix:\n";
    text_complex_matrix(out, m);
  } else {
    emit_json(doc, out);
  }
  return 0;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  verify::Options opt;
  opt.seed = job.seed;
  opt.tolerance = job.tolerance;
  opt.details = job.details || job.suite == "triple";
  std::vector<std::string> names;
  if (job.suite == "all") {
    names = verify::suite_names();
  } else {
    names.push_back(job.suite);
  }
  bool ok = true;
  json reports = json::array();
  for (const std::string& name : names) {
    const verify::Report r = verify::run(name, opt);
    ok = ok && r.passed();
    if (job.format == "text") {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-11s cases=%-6lld failures=%-4lld max_error=%.3e %s", r.suite.c_str(),
                    static_cast<long long>(r.cases), static_cast<long long>(r.failures), r.max_error, r.passed() ? "PASS" : "FAIL");
      out << buf << '\n';
      if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
      for (const std::string& d : r.details) out << "  " << d << '\n';
    } else {
      json jr = {{"suite", r.suite}, {"cases", r.cases}, {"failures", r.failures}, {"max_error", r.max_error}, {"passed", r.passed()}};
      if (!r.first_failure.empty()) jr["first_failure"] = r.first_failure;
      if (!r.details.empty()) jr["details"] = r.details;
      reports.push_back(jr);
    }
  }
  if (job.format != "text") emit_json({{"meta", {{"seed", job.seed}, {"tolerance", job.tolerance}}}, {"reports", reports}}, out);
  return ok ? 0 : 1;
}

void report_error(std::ostream& err, const std::string& name, const std::string& detail) {
  err << json{{"error", name}, {"detail", detail}}.dump() << '\n';
}

void report_error(std::ostream& err, const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(error_name(e.code())) + ": ";
  report_error(err, std::string(error_name(e.code())), what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Geometric quantization of symplectic tori with rational real polarizations", "torusquant"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--g", job.g, "Half the dimension of the torus")->check(CLI::PositiveNumber);
    sub->add_option("--gram", job.gram, "Gram matrix of omega, rows separated by ';' (default standard)");
    sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto lagrangian_opt = [&](CLI::App* sub) {
    sub->add_option("--lagrangian", job.lagrangians, "Generators as rows: \"1 0 0 0; 0 1 0 0\" (repeatable)");
  };

  CLI::App* basis = app.add_subcommand("basis", "Adapted symplectic lattice basis of an isotropic sublattice");
  common(basis);
  lagrangian_opt(basis);

  CLI::App* bks = app.add_subcommand("bks", "Intertwiner between the Hilbert spaces of two polarizations");
  common(bks);
  lagrangian_opt(bks);
  bks->add_option("--k", job.k, "Level (even)");
  bks->add_option("--lift", job.lifts, "Lift indices lambda_1 lambda_2 for the corrected intertwiner");
  bks->add_option("--base", job.base, "Base Lagrangian for the lifts");

  CLI::App* maslov = app.add_subcommand("maslov", "Kashiwara index of three Lagrangians, Maslov index of lifts");
  common(maslov);
  lagrangian_opt(maslov);
  maslov->add_option("--lift", job.lifts, "Lift indices lambda_1 lambda_2 lambda_3");
  maslov->add_option("--base", job.base, "Base Lagrangian for the lifts");
  maslov->add_option("--q", job.q, "Cover degree: indices are taken mod 2q")->check(CLI::PositiveNumber);

  CLI::App* rep = app.add_subcommand("rep", "Matrix of an Sp or Mp element on a polarized Hilbert space");
  common(rep);
  lagrangian_opt(rep);
  rep->add_option("--k", job.k, "Level (even)");
  rep->add_option("--generator", job.generator, "alpha, beta, gamma, gamma-epsilon or epsilon");
  rep->add_option("--param", job.param, "g x g matrix for alpha (in GL(g,Z)) or beta (symmetric)");
  rep->add_option("--matrix", job.matrix, "Symplectic 2g x 2g matrix in lattice coordinates (projective)");

  CLI::App* ver = app.add_subcommand("verify", "Run the seeded property suites");
  ver->add_option("--seed", job.seed, "Random seed (QUANT_SEED overrides)");
  ver->add_option("--tolerance", job.tolerance, "Floating tolerance");
  ver->add_option("--suite", job.suite, "Suite name or 'all'");
  ver->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  ver->add_flag("--details", job.details, "Per-case lines where available");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(err, std::string(error_name(ErrorCode::ParseError)), e.what());
    return 2;
  }

  if (const char* env = std::getenv("QUANT_SEED")) {
    try {
      job.seed = static_cast<std::uint64_t>(parse_int(env));
    } catch (const Error& e) {
      report_error(err, e);
      return 2;
    }
  }

  try {
    if (job.k < 2 || job.k % 2 != 0) throw Error(ErrorCode::InvalidModulus, "k must be even and at least 2");
    if (basis->parsed()) return cmd_basis(job, out);
    if (bks->parsed()) return cmd_bks(job, out);
    if (maslov->parsed()) return cmd_maslov(job, out);
    if (rep->parsed()) return cmd_rep(job, out);
    return cmd_verify(job, out);
  } catch (const Error& e) {
    report_error(err, e);
    return 2;
  }
}

}  // namespace tq::cli
