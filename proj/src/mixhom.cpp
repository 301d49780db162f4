// Command line front end for the mixhom library. Builds complexes from
// builtin examples, JSON files, algebra form spaces, or seeded random data,
// computes their homology, and verifies the deformation identities and exact
// sequence statements. Reports go to stdout, either as JSON matching
// docs/report.schema.json or as fixed-width tables.
//
// Exit codes: 0 when every requested verdict holds, 1 when a verified
// property fails, 2 for usage or input errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mixhom/builders.hpp"
#include "mixhom/homology.hpp"
#include "mixhom/io.hpp"
#include "mixhom/report.hpp"
#include "mixhom/verify.hpp"

namespace {

using mixhom::error;
using mixhom::Json;

// Everything collected from the command line before the field type is known.
struct Options {
  std::string verb;
  std::string what;  // verify subject
  std::string builtin;
  std::string file;
  std::string algebra;
  bool random = false;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  std::optional<std::string> q;  // parsed by the field once it exists
  std::optional<long> top;
  std::string field;
  long p = 0;
  std::optional<std::string> c_kind;
  std::string c_file;
  std::string cob;
  std::string format = "json";
  bool trusted_only = false;
};

// A complex plus whatever extras its source provides: builtin examples carry
// recommended coefficients and sometimes a comparison morphism.
template <class K>
struct Source {
  mixhom::ComplexPtr<K> complex;
  std::optional<mixhom::PolySeq<K>> recommended;
  std::optional<mixhom::MixedMorphism<K>> comparison;
};

template <class K>
Source<K> resolve_source(const Options& o, const mixhom::Field<K>& fld) {
  int given = (o.builtin.empty() ? 0 : 1) + (o.file.empty() ? 0 : 1) +
              (o.algebra.empty() ? 0 : 1) + (o.random ? 1 : 0);
  if (given != 1)
    throw error("need exactly one of --builtin, --file, --algebra, --random");
  if (!o.builtin.empty()) {
    std::optional<K> q;
    if (o.q) q = fld.parse(*o.q);
    auto ex = mixhom::builtin_example(fld, o.builtin, q, o.top);
    return {ex.complex, ex.coefficients, ex.comparison};
  }
  if (!o.file.empty()) {
    Json j = mixhom::read_json_file(o.file);
    return {mixhom::complex_from_json(j, fld), std::nullopt, std::nullopt};
  }
  if (!o.algebra.empty()) {
    Json j = mixhom::read_json_file(o.algebra);
    mixhom::Algebra<K> A = mixhom::algebra_from_json(j, fld);
    return {mixhom::ncforms(A, o.top.value_or(4)), std::nullopt, std::nullopt};
  }
  if (o.dims.empty()) throw error("--random needs --dims");
  return {mixhom::random_mixed(fld, o.dims, o.seed), std::nullopt, std::nullopt};
}

// Coefficient families named on the command line. The recommended family of
// a builtin is used as a fallback so `verify theorem --builtin example1 --q 2`
// works without repeating what the example already knows.
template <class K>
std::optional<mixhom::PolySeq<K>> resolve_coefficients(
    const Options& o, const mixhom::Field<K>& fld,
    const std::optional<mixhom::PolySeq<K>>& recommended) {
  if (o.c_kind) {
    const std::string& kind = *o.c_kind;
    if (kind == "cyclic") return mixhom::PolySeq<K>::cyclic(fld);
    if (kind == "one") return mixhom::PolySeq<K>::constant_one(fld);
    if (kind == "geometric") {
      if (!o.q) throw error("--c geometric needs --q");
      return mixhom::PolySeq<K>::geometric(fld, fld.parse(*o.q));
    }
    if (o.c_file.empty()) throw error("--c explicit needs --c-file");
    return mixhom::polyseq_from_json(mixhom::read_json_file(o.c_file), fld);
  }
  if (!o.c_file.empty())
    return mixhom::polyseq_from_json(mixhom::read_json_file(o.c_file), fld);
  return recommended;
}

// The input echo keeps reports self-describing and, because every value
// comes straight from argv, byte-deterministic across runs.
template <class K>
Json input_echo(const Options& o, const mixhom::Field<K>& fld,
                const std::string& coefficients = "",
                const std::string& cob = "") {
  Json in = Json::object();
  if (!o.builtin.empty()) in["builtin"] = o.builtin;
  if (!o.file.empty()) in["file"] = o.file;
  if (!o.algebra.empty()) in["algebra"] = o.algebra;
  if (o.random) {
    in["random"] = true;
    in["dims"] = o.dims;
    in["seed"] = o.seed;
  }
  long p = fld.characteristic();
  in["field"] = p == 0 ? "Q" : "F" + std::to_string(p);
  if (o.q) in["q"] = *o.q;
  if (o.top) in["N"] = *o.top;
  if (!coefficients.empty()) in["coefficients"] = coefficients;
  if (!cob.empty()) in["cob"] = cob;
  return in;
}

int emit(const Json& report, const Options& o, int code) {
  if (o.format == "table")
    std::cout << mixhom::render_report(report);
  else
    std::cout << report.dump(2) << "\n";
  return code;
}

template <class K>
std::vector<std::size_t> group_dims(
    const std::vector<mixhom::HomologySpace<K>>& groups) {
  std::vector<std::size_t> out;
  for (const auto& h : groups) out.push_back(h.dim());
  return out;
}

template <class K>
std::vector<std::size_t> space_dims(
    const std::vector<mixhom::Subspace<K>>& spaces) {
  std::vector<std::size_t> out;
  for (const auto& s : spaces) out.push_back(s.dim());
  return out;
}

// With --trusted-only the dimension tables stop at the trusted degree
// instead of marking the tail with question marks.
void add_table(Json& report, const Options& o, const std::string& name,
               std::vector<std::size_t> by_degree, std::optional<long> trusted) {
  if (o.trusted_only && trusted &&
      static_cast<std::size_t>(*trusted) + 1 < by_degree.size())
    by_degree.resize(static_cast<std::size_t>(*trusted) + 1);
  mixhom::add_dimensions(report, name, by_degree, trusted);
}

template <class K>
std::optional<long> trusted_of(const mixhom::ComplexPtr<K>& D) {
  if (D->is_truncated()) return D->trusted_degree();
  return std::nullopt;
}

template <class K>
int run_build(const Options& o, const mixhom::Field<K>& fld) {
  auto src = resolve_source(o, fld);
  Json j = mixhom::complex_to_json(*src.complex);
  if (o.format == "table") {
    const auto& D = *src.complex;
    std::cout << "name: " << D.name() << "\n";
    std::cout << "field: " << (fld.characteristic() == 0
                                   ? std::string("Q")
                                   : "F" + std::to_string(fld.characteristic()))
              << "\n";
    std::cout << "dims:";
    for (std::size_t d : D.dims()) std::cout << " " << d;
    std::cout << "\n";
    if (D.is_truncated())
      std::cout << "trusted up to degree " << D.trusted_degree() << "\n";
    std::cout << "b.b = 0, d.d = 0 verified\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

template <class K>
int run_homology(const Options& o, const mixhom::Field<K>& fld) {
  auto src = resolve_source(o, fld);
  const auto& D = src.complex;
  Json report = mixhom::report_envelope("homology", input_echo(o, fld));
  auto trusted = trusted_of(D);
  add_table(report, o, "dim D", D->dims(), std::nullopt);
  add_table(report, o, "H(D,b)",
            group_dims(mixhom::linear_homology(D, mixhom::Direction::chain)),
            trusted);
  add_table(report, o, "H(D,d)",
            group_dims(mixhom::linear_homology(D, mixhom::Direction::cochain)),
            trusted);
  return emit(report, o, 0);
}

template <class K>
int run_mixed_homology(const Options& o, const mixhom::Field<K>& fld) {
  auto src = resolve_source(o, fld);
  const auto& D = src.complex;
  std::optional<mixhom::PolySeq<K>> c;
  if (o.c_kind || !o.c_file.empty())
    c = resolve_coefficients<K>(o, fld, std::nullopt);
  Json report = mixhom::report_envelope(
      "mixed-homology",
      input_echo(o, fld, c ? c->kind_name() : std::string()));
  auto trusted = trusted_of(D);
  add_table(report, o, "dim D", D->dims(), std::nullopt);
  if (c) {
    c->require_invertible_up_to(D->top_degree());
    auto mh = mixhom::mixed_homology(D, *c);
    add_table(report, o, "dim D/(im Xi)", mh.hat.complex->dims(), trusted);
    add_table(report, o, "H(D,b,Ups)", mh.dims(), trusted);
  } else {
    auto mh = mixhom::mixed_homology(D);
    add_table(report, o, "dim D/(im xi)", mh.hat.complex->dims(), trusted);
    add_table(report, o, "H(D,b,d)", mh.dims(), trusted);
  }
  return emit(report, o, 0);
}

template <class K>
int run_skyscraper(const Options& o, const mixhom::Field<K>& fld) {
  auto src = resolve_source(o, fld);
  const auto& D = src.complex;
  std::optional<mixhom::PolySeq<K>> c;
  if (o.c_kind || !o.c_file.empty())
    c = resolve_coefficients<K>(o, fld, std::nullopt);
  else if (o.cob == "upsilon")
    c = src.recommended;
  std::string cob = o.cob.empty() ? (c ? "upsilon" : "d") : o.cob;
  if (cob == "upsilon" && !c)
    throw error("--cob upsilon needs --c (or a builtin with default coefficients)");

  Json report = mixhom::report_envelope(
      "skyscraper",
      input_echo(o, fld, cob == "upsilon" ? c->kind_name() : std::string(), cob));
  mixhom::SkyscraperResult<K> res = [&] {
    if (cob == "d") return mixhom::skyscraper_test(D);
    c->require_invertible_up_to(D->top_degree());
    return mixhom::skyscraper_test(D, *c);
  }();

  for (long n = 0; n <= res.trusted; ++n) {
    auto i = static_cast<std::size_t>(n);
    mixhom::add_check(report, "image complex acyclic", n,
                      res.image_homology_dims[i] == 0);
    mixhom::add_check(report, "quotient map iso on chain homology", n,
                      res.quotient_qiso[i]);
  }
  add_table(report, o, "H(im,b)", res.image_homology_dims, res.trusted);
  add_table(report, o, "H(D,b)", res.chain_dims, res.trusted);
  add_table(report, o, "H(D^,b^)", res.hat_chain_dims, res.trusted);
  for (const auto& [degree, cols] : res.witnesses)
    for (std::size_t j = 0; j < cols.cols(); ++j) {
      mixhom::Matrix<K> col(cols.rows(), 1, fld);
      for (std::size_t i = 0; i < cols.rows(); ++i) col.at(i, 0) = cols.at(i, j);
      mixhom::add_witness(report, degree, col, fld);
    }
  if (!res.skyscraper) {
    long bad = res.witnesses.empty() ? 0 : res.witnesses.front().first;
    for (long n = 0; n <= res.trusted; ++n)
      if (!res.quotient_qiso[static_cast<std::size_t>(n)]) {
        bad = n;
        break;
      }
    mixhom::add_note(report,
                     "not a skyscraper, witness degree " + std::to_string(bad));
  }
  return emit(report, o, res.skyscraper ? 0 : 1);
}

// The individual verify subjects. Each fills the shared report; the caller
// decides the exit code from the accumulated "ok" flag.

template <class K>
void verify_identities(Json& report, const mixhom::ComplexPtr<K>& D,
                       const mixhom::PolySeq<K>& c) {
  mixhom::add_checks(report, mixhom::check_deformation_identities(D, c));
}

template <class K>
void verify_karoubi(Json& report, const mixhom::ComplexPtr<K>& D) {
  mixhom::add_checks(report, mixhom::check_karoubi_identities(D));
}

template <class K>
void verify_splitting(Json& report, const Options& o,
                      const mixhom::ComplexPtr<K>& D,
                      const mixhom::PolySeq<K>& c) {
  auto s = mixhom::kernel_image_splitting(D, c);
  mixhom::add_checks(report, s.report);
  add_table(report, o, "dim D~", s.reduced.complex->dims(), trusted_of(D));
  add_table(report, o, "ker part", space_dims(s.kernel_part), trusted_of(D));
  add_table(report, o, "im part", space_dims(s.image_part), trusted_of(D));
}

template <class K>
void verify_reduced(Json& report, const Options& o,
                    const mixhom::ComplexPtr<K>& D,
                    const mixhom::PolySeq<K>& c) {
  auto rm = mixhom::check_reduced_identities(D, c);
  mixhom::add_checks(report, rm.report);
  add_table(report, o, "dim D~", rm.reduced.complex->dims(), trusted_of(D));
  add_table(report, o, "dim core", rm.core.complex->dims(), trusted_of(D));
}

template <class K>
void verify_image(Json& report, const Options& o,
                  const mixhom::ComplexPtr<K>& D,
                  const mixhom::PolySeq<K>& c) {
  auto rm = mixhom::check_reduced_identities(D, c);
  mixhom::add_checks(report, rm.report);
  auto seq = mixhom::check_image_sequence(rm.core.complex, c);
  mixhom::add_checks(report, seq.checks);
  std::vector<std::size_t> deformed, hat_deformed, sub_below;
  for (const auto& row : seq.rows) {
    deformed.push_back(row.deformed);
    hat_deformed.push_back(row.hat_deformed);
    sub_below.push_back(row.sub_below);
    mixhom::add_check(report, "inclusion injective on homology", row.degree,
                      row.injective);
    mixhom::add_check(report, "sequence dimension count", row.degree,
                      row.dims_ok);
  }
  add_table(report, o, "H(E,b,Ups)", deformed, std::nullopt);
  add_table(report, o, "H(E^,b^,Ups^)", hat_deformed, std::nullopt);
  add_table(report, o, "H(sub) below", sub_below, std::nullopt);
}

template <class K>
void verify_rescaling(Json& report, const Options& o,
                      const mixhom::ComplexPtr<K>& D,
                      const mixhom::PolySeq<K>& c) {
  auto r = mixhom::check_rescaling_iso(D, c);
  mixhom::add_checks(report, r.checks);
  mixhom::add_check(report, "quotient homology dims equal", -1,
                    r.quotient_dims_equal);
  mixhom::add_check(report, "subcomplex homology dims equal", -1,
                    r.sub_dims_equal);
  mixhom::add_check(report, "connecting ranks equal", -1, r.ranks_equal);
  mixhom::add_check(report, "kernel dims equal", -1, r.kernels_equal);
  std::vector<std::size_t> qc, qd, sc, sd;
  for (const auto& row : r.rows) {
    qc.push_back(row.quotient_chain);
    qd.push_back(row.quotient_deformed);
    sc.push_back(row.sub_chain);
    sd.push_back(row.sub_deformed);
  }
  add_table(report, o, "H(Q,b)", qc, std::nullopt);
  add_table(report, o, "H(Q,Ups)", qd, std::nullopt);
  add_table(report, o, "H(S,b)", sc, std::nullopt);
  add_table(report, o, "H(S,Ups)", sd, std::nullopt);
}

template <class K>
void verify_theorem(Json& report, const Options& o,
                    const mixhom::ComplexPtr<K>& D,
                    const mixhom::PolySeq<K>& c) {
  auto rep = mixhom::verify_exact_sequences(D, c);
  if (!rep.beta_invertible)
    throw error("constant coefficients of c are not invertible over this field");
  mixhom::add_check(report, "hat quotient is a skyscraper for Upsilon", -1,
                    rep.skyscraper);
  std::vector<std::size_t> mixed, hatdef, def, below, kerd;
  long trusted = -1;
  for (const auto& row : rep.rows) {
    mixed.push_back(row.chain_mixed);
    hatdef.push_back(row.hat_deformed);
    def.push_back(row.deformed);
    below.push_back(row.image_below);
    kerd.push_back(row.kernel_dim);
    if (!row.trusted) continue;
    trusted = row.degree;
    mixhom::add_check(report, "alpha injective", row.degree, row.injective);
    mixhom::add_check(report, "mixed vs hat deformed dims", row.degree,
                      row.part1);
    mixhom::add_check(report, "deformed splits off image part", row.degree,
                      row.part2);
  }
  std::optional<long> tr =
      trusted >= 0 ? std::optional<long>(trusted) : std::nullopt;
  add_table(report, o, "H(D,b,d)", mixed, tr);
  add_table(report, o, "H(D^,b^,Ups^)", hatdef, tr);
  add_table(report, o, "H(D,b,Ups)", def, tr);
  add_table(report, o, "H(im,b,Ups) shifted", below, tr);
  add_table(report, o, "ker pi", kerd, tr);
}

template <class K>
void verify_corollary(Json& report, const Options& o,
                      const mixhom::ComplexPtr<K>& D) {
  auto cor = mixhom::check_corollary(D);
  std::vector<std::size_t> mixed, cyc, overlap;
  for (const auto& row : cor.rows) {
    mixed.push_back(row.mixed_dim);
    cyc.push_back(row.deformed_dim);
    overlap.push_back(row.overlap_sum);
    mixhom::add_check(report, "mixed = cyclic + overlaps", row.degree,
                      row.holds);
  }
  add_table(report, o, "H(D,b,d)", mixed, std::nullopt);
  add_table(report, o, "HC(D)", cyc, std::nullopt);
  add_table(report, o, "overlap sum", overlap, std::nullopt);
}

template <class K>
int run_verify(const Options& o, const mixhom::Field<K>& fld) {
  auto src = resolve_source(o, fld);
  const auto& D = src.complex;
  bool needs_c = o.what != "karoubi" && o.what != "corollary";
  std::optional<mixhom::PolySeq<K>> c;
  if (needs_c) {
    c = resolve_coefficients(o, fld, src.recommended);
    if (!c)
      throw error("verify " + o.what +
                  " needs --c (or a builtin with default coefficients)");
  }
  Json report = mixhom::report_envelope(
      "verify " + o.what, input_echo(o, fld, c ? c->kind_name() : std::string()));

  if (o.what == "identities") {
    verify_identities(report, D, *c);
  } else if (o.what == "karoubi") {
    verify_karoubi(report, D);
  } else if (o.what == "splitting") {
    verify_splitting(report, o, D, *c);
  } else if (o.what == "reduced") {
    verify_reduced(report, o, D, *c);
  } else if (o.what == "image") {
    verify_image(report, o, D, *c);
  } else if (o.what == "rescaling") {
    verify_rescaling(report, o, D, *c);
  } else if (o.what == "theorem") {
    verify_theorem(report, o, D, *c);
  } else if (o.what == "corollary") {
    verify_corollary(report, o, D);
  } else {  // all
    verify_identities(report, D, *c);
    verify_karoubi(report, D);
    verify_splitting(report, o, D, *c);
    verify_reduced(report, o, D, *c);
    try {
      verify_image(report, o, D, *c);
    } catch (const error& e) {
      mixhom::add_note(report, std::string("image sequence skipped: ") + e.what());
    }
    verify_rescaling(report, o, D, *c);
    verify_theorem(report, o, D, *c);
    try {
      verify_corollary(report, o, D);
    } catch (const error& e) {
      mixhom::add_note(report, std::string("corollary skipped: ") + e.what());
    }
  }
  bool ok = report.at("ok").get<bool>();
  return emit(report, o, ok ? 0 : 1);
}

int run_examples(const Options& o) {
  Json report = mixhom::report_envelope("examples", Json::object());
  mixhom::add_note(report,
                   "appendix0: two-step complex whose quotient map fails to be a "
                   "quasi-isomorphism in degree 1");
  mixhom::add_note(report,
                   "banalitaet: point mapping into a tower; a cochain "
                   "quasi-isomorphism that is not a mixed one (top degree --N, "
                   "default 6)");
  mixhom::add_note(report,
                   "example1: quantum plane tower with geometric coefficients "
                   "(needs --q; top degree --N, default 6)");
  mixhom::add_note(report, "example2: three lines with constant-one coefficients");
  mixhom::add_note(report,
                   "exterior2: noncommutative forms of the rank 4 exterior "
                   "algebra with cyclic coefficients (top degree --N, default 4)");
  return emit(report, o, 0);
}

template <class K>
int run_verb(const Options& o, const mixhom::Field<K>& fld) {
  if (o.verb == "build") return run_build(o, fld);
  if (o.verb == "homology") return run_homology(o, fld);
  if (o.verb == "mixed-homology") return run_mixed_homology(o, fld);
  if (o.verb == "skyscraper") return run_skyscraper(o, fld);
  if (o.verb == "verify") return run_verify(o, fld);
  throw error("unknown verb '" + o.verb + "'");
}

int dispatch(const Options& o) {
  if (o.verb == "examples") return run_examples(o);
  if (!o.file.empty()) {
    if (!o.field.empty() || o.p != 0)
      throw error("--field/--p conflict with --file; the file fixes the field");
    Json j = mixhom::read_json_file(o.file);
    if (!j.is_object() || !j.contains("field"))
      throw error("complex file needs a field section");
    mixhom::FieldSpec spec = mixhom::field_spec_from_json(j.at("field"));
    if (spec.rational) {
      mixhom::RationalField fld;
      return run_verb(o, fld);
    }
    mixhom::PrimeField fld(spec.p);
    return run_verb(o, fld);
  }
  std::string field = o.field.empty() ? "Q" : o.field;
  if (field == "Q") {
    if (o.p != 0) throw error("--p needs --field Fp");
    mixhom::RationalField fld;
    return run_verb(o, fld);
  }
  if (o.p == 0) throw error("--field Fp needs --p");
  mixhom::PrimeField fld(o.p);
  return run_verb(o, fld);
}

void add_common(CLI::App* cmd, Options& o, bool with_coefficients) {
  cmd->add_option("--builtin", o.builtin,
                  "builtin example name (see `mixhom examples`)");
  cmd->add_option("--file", o.file, "complex JSON file");
  cmd->add_option("--algebra", o.algebra,
                  "algebra JSON file; uses its noncommutative forms");
  cmd->add_flag("--random", o.random, "seeded random complex (needs --dims)");
  cmd->add_option("--dims", o.dims, "dimensions by degree for --random")
      ->delimiter(',');
  cmd->add_option("--seed", o.seed, "seed for --random");
  cmd->add_option("--q", o.q,
                  "parameter for builtin example1 and the geometric family");
  cmd->add_option("--N", o.top, "top degree for unbounded builtins and --algebra");
  cmd->add_option("--field", o.field, "coefficient field (default Q)")
      ->check(CLI::IsMember({"Q", "Fp"}));
  cmd->add_option("--p", o.p, "prime modulus for --field Fp");
  cmd->add_option("--format", o.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--trusted-only", o.trusted_only,
                "cut dimension tables at the trusted degree");
  if (with_coefficients) {
    cmd->add_option("--c", o.c_kind, "coefficient family")
        ->check(CLI::IsMember({"cyclic", "one", "geometric", "explicit"}));
    cmd->add_option("--c-file", o.c_file,
                    "coefficient JSON file for --c explicit");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact homology and verification for mixed complexes"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "assemble a complex and print it");
  add_common(build, o, false);
  auto* homology =
      app.add_subcommand("homology", "chain and cochain homology dimensions");
  add_common(homology, o, false);
  auto* mixed = app.add_subcommand(
      "mixed-homology", "mixed homology, deformed when --c is given");
  add_common(mixed, o, true);
  auto* sky = app.add_subcommand(
      "skyscraper", "test whether the quotient map is a quasi-isomorphism");
  add_common(sky, o, true);
  sky->add_option("--cob", o.cob, "which coboundary to test (default: d, or "
                                  "upsilon when coefficients are given)")
      ->check(CLI::IsMember({"d", "upsilon"}));
  auto* verify =
      app.add_subcommand("verify", "check identities and exact sequences");
  verify
      ->add_option("what", o.what,
                   "identities|karoubi|splitting|reduced|image|rescaling|"
                   "theorem|corollary|all")
      ->required()
      ->check(CLI::IsMember({"identities", "karoubi", "splitting", "reduced",
                             "image", "rescaling", "theorem", "corollary",
                             "all"}));
  add_common(verify, o, true);
  auto* examples =
      app.add_subcommand("examples", "list the builtin example complexes");
  examples->add_option("--format", o.format, "output format (default json)")
      ->check(CLI::IsMember({"json", "table"}));

  for (auto* cmd : {build, homology, mixed, sky, verify, examples})
    cmd->callback([&o, cmd] { o.verb = cmd->get_name(); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(o);
  } catch (const mixhom::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
