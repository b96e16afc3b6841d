#include <algorithm>

#include "gsurf/cli.hpp"
#include "gsurf/errors.hpp"

namespace gsurf::cli {

namespace {

Json to_json(const Integer& z) { return to_string(z); }
Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Cyclotomic& c) { return c.to_string(); }

Json int_vector(const std::vector<std::int64_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

Json int_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(int_vector(m.row(i)));
  return out;
}

Json witnesses(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) {
    Json j;
    j["field"] = w.field;
    if (w.row) j["row"] = *w.row;
    j["detail"] = w.detail;
    out.push_back(std::move(j));
  }
  return out;
}

Json multiplicities(const IsotypicalVector& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(x);
  return out;
}

Json header(const std::string& sub, const Job& job) {
  Json r;
  r["job"] = job.name;
  r["subcommand"] = sub;
  r["group_order"] = job.group().order();
  return r;
}

const NamedSubgroup& chosen_subgroup(const Job& job) {
  if (job.subgroups.empty()) throw ValidationError("/subgroups: check-gn needs a subgroup N");
  if (!job.options.subgroup) return job.subgroups.front();
  for (const auto& s : job.subgroups)
    if (s.name == *job.options.subgroup) return s;
  throw ValidationError("/subgroups: no subgroup named '" + *job.options.subgroup + "'");
}

std::vector<CurveSpec> curves_of(const Job& job) {
  std::vector<CurveSpec> out;
  for (std::size_t i = 0; i < job.curve_words.size(); ++i)
    out.push_back(parse_curve(job.curve_words[i], job.datum.quotient_genus, job.datum.branch_count(),
                              job.curve_names[i]));
  return out;
}

Json chartable(const Job& job, const CharacterTable& t) {
  const FiniteGroup& g = job.group();
  const ConjugacyData& cd = g.classes();
  Json r;
  r["exponent"] = g.exponent();
  r["dixon_prime"] = t.dixon_prime();
  Json classes = Json::array();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    Json j;
    j["class"] = c;
    j["representative"] = g.element_name(cd.representatives[c]);
    j["size"] = cd.sizes[c];
    j["order"] = cd.element_order[c];
    classes.push_back(std::move(j));
  }
  r["classes"] = std::move(classes);
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json j;
    j["row"] = i;
    j["degree"] = t[i].degree;
    j["indicator"] = indicator_value(t[i].indicator);
    j["dual"] = t[i].dual;
    j["rational_class"] = t.rational_class_of(i);
    Json values = Json::array();
    for (const auto& v : t[i].values) values.push_back(to_json(v));
    j["values"] = std::move(values);
    rows.push_back(std::move(j));
  }
  r["characters"] = std::move(rows);
  Json rational = Json::array();
  for (const auto& rc : t.rational_classes()) {
    Json j;
    j["rows"] = rc.rows;
    j["field_degree"] = rc.field_degree();
    Json sums = Json::array();
    for (const auto& z : rc.orbit_sum) sums.push_back(to_json(z));
    j["orbit_sum"] = std::move(sums);
    rational.push_back(std::move(j));
  }
  r["rational_classes"] = std::move(rational);
  return r;
}

Json geometry(const Job& job) {
  const FiniteGroup& g = job.group();
  const GeometryReport gr = moduli_dimension(job.datum);
  Json r;
  r["total_genus"] = gr.total_genus;
  r["quotient_genus"] = gr.quotient_genus;
  r["branch_count"] = gr.branch_count;
  r["moduli_dimension"] = gr.moduli_dimension;
  r["regular_euler_characteristic"] = gr.regular_euler_characteristic;
  r["positive_dimensional"] = gr.positive_dimensional;
  Json branch = Json::array();
  for (std::size_t i = 0; i < job.datum.branch.size(); ++i) {
    const int x = job.datum.branch[i];
    Json j;
    j["point"] = "t" + std::to_string(i + 1);
    j["monodromy"] = g.element_name(x);
    j["order"] = g.order_of(x);
    j["fiber_size"] = g.order() / static_cast<std::size_t>(g.order_of(x));
    branch.push_back(std::move(j));
  }
  r["branch_points"] = std::move(branch);
  const ConjugacyData& cd = g.classes();
  Json fixed = Json::array();
  Json hyper = Json::array();
  for (std::size_t c = 1; c < cd.count(); ++c) {
    Json j;
    j["class"] = c;
    j["representative"] = g.element_name(cd.representatives[c]);
    j["fixed_points"] = fixed_point_count(job.datum, cd.representatives[c]);
    fixed.push_back(std::move(j));
  }
  for (std::size_t x = 1; x < g.order(); ++x)
    if (g.order_of(static_cast<int>(x)) == 2 && is_hyperelliptic_involution(job.datum, static_cast<int>(x)))
      hyper.push_back(g.element_name(static_cast<int>(x)));
  r["fixed_points"] = std::move(fixed);
  r["hyperelliptic_involutions"] = std::move(hyper);
  Json subs = Json::array();
  for (const auto& s : job.subgroups) {
    Json j;
    j["name"] = s.name;
    j["order"] = s.subgroup.order();
    j["index"] = index(g, s.subgroup);
    j["normal"] = is_normal(g, s.subgroup);
    j["quotient_genus"] = quotient_genus(job.datum, s.subgroup);
    subs.push_back(std::move(j));
  }
  r["subgroups"] = std::move(subs);
  r["note"] = "character-level outputs depend only on the conjugacy classes of the monodromy";
  return r;
}

Json hodge(const Job& job, const CharacterTable& t) {
  const IsotypicalVector h0 = h0_character(job.datum, t);
  const IsotypicalVector h1 = h1_character(job.datum, t);
  Json r;
  r["total_genus"] = total_genus(job.datum);
  Json rows = Json::array();
  long weighted = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    Json j;
    j["row"] = i;
    j["degree"] = t[i].degree;
    j["h0"] = h0[i];
    j["h1"] = h1[i];
    rows.push_back(std::move(j));
    weighted += t[i].degree * h0[i];
  }
  require(weighted == total_genus(job.datum), "Chevalley-Weil total differs from the genus");
  r["characters"] = std::move(rows);
  r["h0"] = multiplicities(h0);
  r["h1"] = multiplicities(h1);
  if (job.options.oracle) {
    const IsotypicalVector oracle = h1_chain_complex_oracle(job.datum, t, job.options.cap_oracle);
    Json o;
    o["h1"] = multiplicities(oracle);
    o["agrees"] = oracle == h1;
    require(oracle == h1, "chain-complex H^1 differs from the formula");
    r["oracle"] = std::move(o);
  }
  return r;
}

Json sym2(const Job& job, const CharacterTable& t) {
  const IsotypicalVector h0 = h0_character(job.datum, t);
  const Sym2Report s = sym2_report(t, h0);
  Json r;
  r["module"] = "H^0(Omega)";
  r["h0"] = multiplicities(h0);
  r["orthogonal_part"] = to_json(s.orthogonal_part);
  r["symplectic_part"] = to_json(s.symplectic_part);
  r["complex_part"] = to_json(s.complex_part);
  r["total"] = to_json(s.total);
  r["character_formula"] = to_json(s.character_formula);
  r["alternating"] = to_json(s.alternating);
  return r;
}

Json endo(const Job& job, const CharacterTable& t) {
  const EndoReport e = check_theorem_endo(job.datum, t);
  Json r;
  r["moduli_dim_positive"] = e.moduli_dim_positive;
  r["no_central_hyperelliptic"] = e.no_central_hyperelliptic;
  r["hyperelliptic_check_partial"] = e.hyperelliptic_check_partial;
  r["symplectic_mult_ok"] = e.symplectic_mult_ok;
  r["dual_pairs_ok"] = e.dual_pairs_ok;
  r["hypotheses_hold"] = e.hypotheses_hold;
  r["every_nontrivial_mult_ge_2"] = e.every_nontrivial_mult_ge_2;
  r["every_nontrivial_mult_ge_4"] = e.every_nontrivial_mult_ge_4;
  r["h0"] = multiplicities(e.h0);
  r["witnesses"] = witnesses(e.witnesses);
  return r;
}

Json gn(const Job& job, const CharacterTable& t) {
  const NamedSubgroup& n = chosen_subgroup(job);
  const GNReport e = check_theorem_GN(job.datum, t, n.subgroup);
  Json r;
  r["subgroup"] = n.name;
  r["subgroup_order"] = n.subgroup.order();
  r["index_two"] = e.index_two;
  r["acts_freely"] = e.acts_freely;
  r["quotient_genus_n"] = e.quotient_genus_n;
  r["quotient_genus_ge_2"] = e.quotient_genus_ge_2;
  r["quotient_hyperelliptic"] = e.quotient_hyperelliptic;
  r["quotient_genus_ge_4"] = e.quotient_genus_ge_4;
  r["hypotheses_hold"] = e.hypotheses_hold;
  r["conclusions_checked"] = e.conclusions_checked;
  r["conclusion_i"] = e.conclusion_i;
  r["conclusion_ii"] = e.conclusion_ii;
  Json cs = Json::array();
  for (const auto& c : e.constituents) {
    Json j;
    j["row"] = c.row;
    j["multiplicity"] = c.multiplicity;
    j["expected"] = to_json(c.expected);
    j["multiplicity_ok"] = c.multiplicity_ok;
    j["restriction_splits"] = c.restriction_splits;
    j["induction_recovers"] = c.induction_recovers;
    cs.push_back(std::move(j));
  }
  r["constituents"] = std::move(cs);
  r["h0"] = multiplicities(e.h0);
  r["witnesses"] = witnesses(e.witnesses);
  return r;
}

Json commutant(const CommutantResult& c) {
  Json j;
  j["block_dimension"] = c.block_dimension;
  j["commutant_dimension"] = c.commutant_dimension;
  j["complex_multiplicity"] = c.complex_multiplicity;
  j["schur_index"] = c.schur_index;
  j["schur_lower_bound"] = c.schur_lower_bound;
  j["schur_upper_bound"] = c.schur_upper_bound;
  j["schur_certified"] = c.schur_certified;
  j["rational_multiplicity"] = c.rational_multiplicity;
  j["division_algebra_dimension"] = c.division_algebra_dimension;
  return j;
}

Json unitary(const Job& job, const CharacterTable& t) {
  const IsotypeReport rep = isotype_report(job.datum, t, job.options.oracle, job.options.cap_oracle);
  Json r;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["row"] = e.row;
    j["type"] = to_string(e.type);
    j["multiplicity"] = e.multiplicity;
    j["rank"] = e.rank;
    j["group"] = e.group;
    if (e.signature) j["signature"] = Json::array({e.signature->first, e.signature->second});
    j["rational_class"] = e.rational_class;
    entries.push_back(std::move(j));
  }
  r["entries"] = std::move(entries);
  Json classes = Json::array();
  for (const auto& c : rep.classes) {
    Json j;
    j["rational_class"] = c.rational_class;
    j["rows"] = c.rows;
    j["field_degree"] = c.field_degree;
    j["real_subfield_degree"] = c.real_subfield_degree;
    if (c.commutant) j["commutant"] = commutant(*c.commutant);
    classes.push_back(std::move(j));
  }
  r["classes"] = std::move(classes);
  r["signature_convention"] = rep.signature_convention;
  return r;
}

Json lift(const Job& job, const CharacterTable& t, const CoverModel& m) {
  Json r;
  r["genus"] = m.genus();
  Json curves = Json::array();
  for (const auto& c : curves_of(job)) {
    const MultiTwistOrbit o = lift_curve(m, c);
    Json j;
    j["name"] = c.name;
    j["word"] = to_string(c.word, job.datum.quotient_genus);
    j["monodromy"] = job.group().element_name(o.monodromy);
    j["degree"] = o.degree;
    Json comps = Json::array();
    for (std::size_t k = 0; k < o.classes.size(); ++k) {
      Json cj;
      cj["start"] = job.group().element_name(o.component_starts[k]);
      cj["class"] = int_vector(o.classes[k]);
      comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);
    Json iso = Json::array();
    for (std::size_t rc = 0; rc < t.rational_classes().size(); ++rc) {
      const IsotypicalImage img = isotypical_image_test(m, t, o, rc);
      Json ij;
      ij["rational_class"] = rc;
      ij["nonzero"] = img.nonzero;
      Json proj = Json::array();
      for (const auto& v : img.projections) {
        Json pv = Json::array();
        for (const auto& x : v) pv.push_back(to_json(x));
        proj.push_back(std::move(pv));
      }
      ij["projections"] = std::move(proj);
      iso.push_back(std::move(ij));
    }
    j["isotypical_images"] = std::move(iso);
    curves.push_back(std::move(j));
  }
  r["curves"] = std::move(curves);
  r["caveat"] = "curve words are taken to be embedded circles as asserted; only isotropy of the lifts is checked";
  return r;
}

Json twist(const Job& job, const CoverModel& m) {
  Json r;
  r["genus"] = m.genus();
  r["intersection_form"] = int_matrix(m.form());
  Json curves = Json::array();
  const IntMatrix id = IntMatrix::identity(m.rank());
  for (const auto& c : curves_of(job)) {
    const MultiTwistOrbit o = lift_curve(m, c);
    const IntMatrix tm = transvection(m, o);
    const IntMatrix n = tm - id;
    const bool symplectic = tm.transpose() * m.form() * tm == m.form();
    bool commutes = true;
    for (const auto& a : m.actions()) commutes = commutes && a * tm == tm * a;
    const bool square_zero = (n * n).is_zero();
    const Rational det = determinant(to_rational(tm));
    require(symplectic && commutes && square_zero && det == 1, "transvection property failed for " + c.name);
    Json j;
    j["name"] = c.name;
    j["word"] = to_string(c.word, job.datum.quotient_genus);
    j["components"] = o.classes.size();
    j["matrix"] = int_matrix(tm);
    j["symplectic"] = symplectic;
    j["commutes_with_group"] = commutes;
    j["square_zero"] = square_zero;
    j["determinant"] = to_json(det);
    curves.push_back(std::move(j));
  }
  r["curves"] = std::move(curves);
  return r;
}

Json certify(const Job& job, const CharacterTable& t, const CoverModel& m) {
  const std::vector<CurveSpec> curves = curves_of(job);
  const IsotypicalVector h1 = h1_character(job.datum, t);
  std::vector<std::size_t> classes;
  if (job.options.rational_class) {
    if (*job.options.rational_class >= t.rational_classes().size())
      throw ValidationError("/options/rational_class: out of range");
    classes.push_back(*job.options.rational_class);
  } else {
    for (std::size_t c = 0; c < t.rational_classes().size(); ++c)
      if (h1[t.rational_classes()[c].rows.front()] > 0) classes.push_back(c);
  }
  Json r;
  Json names = Json::array();
  for (const auto& c : curves) names.push_back(c.name);
  r["curves"] = std::move(names);
  Json certs = Json::array();
  for (std::size_t c : classes) {
    const TwistCertificate tc = twist_algebra_certificate(m, t, curves, c);
    Json j;
    j["rational_class"] = tc.rational_class;
    j["verdict"] = tc.verdict;
    j["block_dimension"] = tc.block_dimension;
    j["algebra_dimension"] = tc.algebra_dimension;
    j["commutant_dimension"] = tc.commutant_dimension;
    j["division_algebra_dimension"] = tc.division_algebra_dimension;
    j["caveats"] = tc.caveats;
    certs.push_back(std::move(j));
  }
  r["certificates"] = std::move(certs);
  return r;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"chartable", "geometry",  "hodge", "sym2", "check-endo",
                                              "check-gn",  "unitary",   "lift",  "twist", "certify"};
  return names;
}

Json run_report(const std::string& sub, const Job& job) {
  if (std::find(subcommands().begin(), subcommands().end(), sub) == subcommands().end())
    throw ValidationError("unknown subcommand '" + sub + "'");
  Json r = header(sub, job);
  Json body;
  if (sub == "geometry") {
    body = geometry(job);
  } else {
    const CharacterTable t = CharacterTable::compute(job.group());
    if (sub == "chartable") body = chartable(job, t);
    if (sub == "hodge") body = hodge(job, t);
    if (sub == "sym2") body = sym2(job, t);
    if (sub == "check-endo") body = endo(job, t);
    if (sub == "check-gn") body = gn(job, t);
    if (sub == "unitary") body = unitary(job, t);
    if (sub == "lift" || sub == "twist" || sub == "certify") {
      const CoverModel m = CoverModel::build(job.datum, job.options.cap_topology);
      if (sub == "lift") body = lift(job, t, m);
      if (sub == "twist") body = twist(job, m);
      if (sub == "certify") body = certify(job, t, m);
    }
  }
  for (auto& [key, value] : body.items()) r[key] = value;
  return r;
}

}  // namespace gsurf::cli
