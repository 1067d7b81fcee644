#include "darboux/corpus.hpp"

#include "darboux/report.hpp"
#include "darboux/sampling.hpp"

namespace darboux {

namespace {

const char* kImmersion = R"({
  "version": 1, "kind": "chart",
  "chart": ["x", "p_x", "y", "p_y"],
  "forms": {"omega": "dx∧dp_x + dy∧dp_y"},
  "maps": {"j": {"source": ["x", "p"], "components": ["x", "p^2/2", "0", "p"],
                 "pullback": ["omega"], "points": [["0", "0"], ["0", "1"]]}}
})";

const char* kRankJump = R"({
  "version": 1, "kind": "chart",
  "chart": ["x", "y"],
  "forms": {"omega_P": "(x^2+y^2) * dx∧dy"},
  "points": [["0", "0"], ["1", "0"]]
})";

const char* kCounterChart = R"({
  "version": 1, "kind": "chart",
  "chart": ["lambda", "y1", "y2"],
  "forms": {"omega1": "dlambda∧dy1", "omega2": "2*lambda * dlambda∧dy1"},
  "points": [["0", "0", "0"], ["1", "0", "0"]]
})";

const char* kNoGo = R"({
  "version": 1, "kind": "chart",
  "chart": ["y1", "y2", "p11", "p12", "p21", "p22"],
  "forms": {"omega1": "dy1∧dp11 + dy2∧dp12", "omega2": "dy1∧dp21 + dy2∧dp22"},
  "maps": {"jS": {"source": ["x", "y"], "components": ["x", "y", "0", "x", "y", "0"],
                  "pullback": ["omega1", "omega2"]}}
})";

const char* kContactConnection = R"({
  "version": 1, "kind": "connection",
  "chart": ["t", "x", "p"],
  "christoffel": [{"upper": "t", "lower": ["p", "x"], "value": "-1"}],
  "forms": {"eta": "dt - p*dx"}
})";

const char* kContactDistribution = R"({
  "version": 1, "kind": "chart",
  "chart": ["t", "x", "p"],
  "vector_fields": {"P": ["0", "0", "1"], "X": ["p", "1", "0"]},
  "distributions": {"ker_eta": ["P", "X"]},
  "points": [["0", "0", "0"], ["1", "2", "3"]]
})";

const char* kKCosymplectic = R"({
  "version": 1, "kind": "kCosymplectic", "dim": 5,
  "forms": {
    "eta": [[{"indices": [1], "coeff": "1"}], [{"indices": [2], "coeff": "1"}]],
    "omega": [[{"indices": [3, 4], "coeff": "1"}], [{"indices": [3, 5], "coeff": "1"}]]
  },
  "V": [["0", "0", "0", "1", "0"], ["0", "0", "0", "0", "1"]],
  "params": {"k": 2, "n": 1}
})";

const char* kKSymplectic = R"({
  "version": 1, "kind": "unknown", "dim": 3,
  "forms": {"omega": [[{"indices": [1, 2], "coeff": "1"}], [{"indices": [1, 3], "coeff": "1"}]]},
  "V": [["0", "1", "0"], ["0", "0", "1"]]
})";

const char* kStandard = R"({
  "version": 1, "kind": "multisymplectic", "dim": 3,
  "forms": {"Omega": [{"indices": [3, 1, 2], "coeff": "1"}]}
})";

PolyForm form_on(const ChartBundle& b, const std::string& name) { return b.forms.at(name); }

CorpusOutcome immersion() {
  const auto doc = parse_spec(kImmersion);
  const auto& e = doc.chart.maps.at("j");
  const PolyForm pulled = pullback_map(e.map, doc.chart.forms.at("omega"));
  const PolyForm expected = parse_polyform("p * dx∧dp", e.map.source);
  const Subspace k0 = kernel_distribution(pulled, e.points[0]);
  const Subspace k1 = kernel_distribution(pulled, e.points[1]);
  CorpusOutcome o;
  o.pass = pulled == expected && k0.dim() == 2 && k1.is_zero();
  o.facts = Json{{"pullback", to_string(pulled)}, {"kernel_dim_at_p0", k0.dim()}, {"kernel_dim_at_p1", k1.dim()}};
  return o;
}

CorpusOutcome rank_jump() {
  const auto doc = parse_spec(kRankJump);
  const PolyForm w = form_on(doc.chart, "omega_P");
  const auto ranks = rank_profile(w, doc.chart.points);
  CorpusOutcome o;
  o.pass = is_closed(w) && ranks == std::vector<std::size_t>{0, 2} &&
           kernel_distribution(w, doc.chart.points[0]).dim() == 2 && generic_rank(w) == 2;
  o.facts = Json{{"closed", is_closed(w)}, {"rank_at_origin", ranks[0]}, {"rank_at_1_0", ranks[1]},
                 {"generic_rank", generic_rank(w)}};
  return o;
}

CorpusOutcome counter() {
  const auto doc = parse_spec(kCounterChart);
  const PolyForm w1 = form_on(doc.chart, "omega1"), w2 = form_on(doc.chart, "omega2");
  const Vec at1 = doc.chart.points[1];
  const std::vector<AltForm> omegas{w1.evaluate(at1), w2.evaluate(at1)};
  const Subspace V = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)});
  const Verdict v = check_k_presymplectic(omegas, V, std::nullopt, std::nullopt);
  const Clause* sep = v.find("kernel separation");
  std::string nf_clause;
  try {
    k_presymplectic_darboux(omegas, V, k_presymplectic_splitting(omegas, V, Mat::identity(3)), Mat::identity(3));
  } catch (const StructureError& e) {
    nf_clause = e.clause();
  }
  const auto ranks2 = rank_profile(w2, doc.chart.points);
  CorpusOutcome o;
  o.pass = is_closed(w1) && is_closed(w2) && !v.accepted && sep && !sep->pass &&
           sep->note.find("kernels coincide") != std::string::npos && nf_clause == "kernel separation" &&
           ranks2 == std::vector<std::size_t>{0, 2};
  o.facts = Json{{"closed", is_closed(w1) && is_closed(w2)},
                 {"checker_accepts", v.accepted},
                 {"diagnostic", sep ? sep->note : ""},
                 {"normal_form_failure", nf_clause},
                 {"omega2_rank_at_lambda_0", ranks2[0]},
                 {"omega2_rank_at_lambda_1", ranks2[1]}};
  return o;
}

CorpusOutcome no_go() {
  const auto doc = parse_spec(kNoGo);
  const auto& e = doc.chart.maps.at("jS");
  const Chart q = e.map.source;
  const PolyForm theta1 = parse_polyform("x * dy", q), theta2 = parse_polyform("y * dx", q);
  const PolyForm s1 = pullback_map(e.map, doc.chart.forms.at("omega1"));
  const PolyForm s2 = pullback_map(e.map, doc.chart.forms.at("omega2"));
  CorpusOutcome o;
  o.pass = s1 == -exterior_derivative(theta1) && s2 == -exterior_derivative(theta2) &&
           s1 == parse_polyform("-dx∧dy", q) && s2 == parse_polyform("dx∧dy", q);
  o.facts = Json{{"jS*omega1", to_string(s1)}, {"jS*omega2", to_string(s2)},
                 {"-d theta1", to_string(-exterior_derivative(theta1))},
                 {"-d theta2", to_string(-exterior_derivative(theta2))}};
  return o;
}

CorpusOutcome contact_connection() {
  const auto doc = parse_spec(kContactConnection);
  const Connection& c = doc.connection.connection;
  const PolyForm eta = doc.connection.forms.at("eta");
  const TensorField T = torsion(c);
  const std::size_t t = 0, x = 1, p = 2;
  const Poly one = Poly::constant(3, Rat(1));
  bool only_two = true;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t u = 0; u < 3; ++u) {
        const bool listed = u == t && ((a == x && b == p) || (a == p && b == x));
        only_two = only_two && (listed || T.at({u, a, b}).is_zero());
      }
  CorpusOutcome o;
  o.pass = is_parallel(c, eta) && T.at({t, x, p}) == one && T.at({t, p, x}) == -one && only_two && is_flat(c) &&
           !is_closed(eta);
  o.facts = Json{{"parallel", is_parallel(c, eta)}, {"T^t_xp", to_string(T.at({t, x, p}), c.chart())},
                 {"T^t_px", to_string(T.at({t, p, x}), c.chart())}, {"flat", is_flat(c)},
                 {"d_eta", to_string(exterior_derivative(eta))}};
  return o;
}

CorpusOutcome contact_distribution() {
  const auto doc = parse_spec(kContactDistribution);
  const auto& f = doc.chart.vector_fields;
  const auto rep = frobenius_involutive({f.at("P"), f.at("X")}, doc.chart.points);
  const PolyVectorField br = lie_bracket(f.at("P"), f.at("X"));
  CorpusOutcome o;
  o.pass = !rep.generic && br == coordinate_field(doc.chart.chart, 0) && !rep.at_points[0] && !rep.at_points[1];
  o.facts = Json{{"involutive", rep.generic}, {"bracket", to_string(br)}};
  return o;
}

CorpusOutcome k_cosymplectic_model() {
  const auto doc = parse_spec(kKCosymplectic);
  const Verdict v = check(StructureKind::k_cosymplectic, doc.linear);
  const auto reeb = reeb_solve(doc.linear.etas, doc.linear.omegas);
  const auto nf = normal_form(doc.linear);
  CorpusOutcome o;
  o.pass = v.accepted && reeb.base == std::vector<Vec>{unit_vec(5, 0), unit_vec(5, 1)} && reeb.freedom.is_zero() &&
           nf.verified && nf.frame.change() == Mat::identity(5);
  o.facts = Json{{"accepted", v.accepted}, {"reeb", vectors_to_json(reeb.base)},
                 {"freedom_dim", reeb.freedom.dim()}, {"identity_frame", nf.frame.change() == Mat::identity(5)}};
  return o;
}

CorpusOutcome k_symplectic_model() {
  const auto doc = parse_spec(kKSymplectic);
  const auto c = classify(doc.linear);
  const bool ks = std::find(c.accepted.begin(), c.accepted.end(), StructureKind::k_symplectic) != c.accepted.end();
  const Verdict v = check(StructureKind::k_symplectic, doc.linear);
  CorpusOutcome o;
  o.pass = ks && v.params.k == 2u && v.params.n == 1u;
  Json acc = Json::array();
  for (auto k : c.accepted) acc.push_back(to_string(k));
  o.facts = Json{{"accepted", acc}};
  return o;
}

CorpusOutcome canonical_models() {
  std::mt19937_64 rng(7);
  const std::vector<CanonicalTemplate> ts = {
      CanonicalTemplate::symplectic(2),           CanonicalTemplate::presymplectic(1, 1),
      CanonicalTemplate::cosymplectic(1),         CanonicalTemplate::precosymplectic(1, 1),
      CanonicalTemplate::k_symplectic(2, 1),      CanonicalTemplate::k_presymplectic(2, {{0}, {1}}, 0),
      CanonicalTemplate::k_cosymplectic(2, 1),    CanonicalTemplate::k_precosymplectic(2, {{0}, {1}}, 1)};
  bool ok = true;
  Json rows = Json::array();
  for (const auto& t : ts) {
    const StructureSpec s = template_spec(t);
    const Verdict v = check(s.kind, s);
    const auto nf = normal_form(s);
    const bool identity = nf.frame.change() == Mat::identity(t.dim());
    ok = ok && v.accepted && nf.verified && nf.tmpl == t && identity;
    rows.push_back(Json{{"kind", to_string(t.kind)}, {"accepted", v.accepted}, {"identity_frame", identity}});
  }
  return CorpusOutcome{ok, rows};
}

CorpusOutcome standard_nplectic() {
  const auto doc = parse_spec(kStandard);
  const Verdict multi = check(StructureKind::multisymplectic, doc.linear);
  const Verdict v = check_standard_nplectic(*doc.linear.big_omega);
  const auto it = v.data.find("W");
  const bool w_is_dp = it != v.data.end() && it->second == std::vector<Vec>{unit_vec(3, 2)};
  CorpusOutcome o;
  o.pass = multi.accepted && v.accepted && w_is_dp;
  o.facts = Json{{"multisymplectic", multi.accepted}, {"standard", v.accepted},
                 {"W", it != v.data.end() ? vectors_to_json(it->second) : Json::array()}};
  return o;
}

CorpusOutcome degenerate_cases() {
  const auto cosym = cosymplectic_darboux(AltForm::basis_covector(1, 0), AltForm(1, 2));
  const auto pre = presymplectic_darboux(AltForm(3, 2));
  CorpusOutcome o;
  o.pass = cosym.verified && cosym.reeb == std::vector<Vec>{unit_vec(1, 0)} && pre.tmpl.r == 0 && pre.tmpl.d == 3 &&
           pre.frame.change() == Mat::identity(3);
  o.facts = Json{{"cosymplectic_dim1_reeb", vectors_to_json(cosym.reeb)}, {"presymplectic_zero_d", pre.tmpl.d}};
  return o;
}

CorpusOutcome tautological() {
  const Chart c{"q", "p"};
  const PolyForm theta = parse_polyform("p * dq", c);
  const PolyForm d = exterior_derivative(theta);
  CorpusOutcome o;
  o.pass = d == parse_polyform("dp∧dq", c) && is_closed(d);
  o.facts = Json{{"d(p dq)", to_string(d)}};
  return o;
}

}  // namespace

const std::vector<CorpusExample>& corpus() {
  static const std::vector<CorpusExample> examples = {
      {"immersion-pullback", "immersion (x, p) -> (x, p^2/2, 0, p) pulls the canonical form back to p_x dx∧dp_x",
       immersion},
      {"rank-jump", "closed form (x^2+y^2) dx∧dy on R^2 whose rank is not constant", rank_jump},
      {"counter", "proportional closed forms dλ∧dy1 and (∂f/∂λ) dλ∧dy1 with f = λ^2 admit no Darboux coordinates",
       counter},
      {"no-go-identity", "section S of potentials θ1 = x dy, θ2 = y dx satisfies jS*ω^α = -dθ^α", no_go},
      {"contact-connection", "η = dt - p dx is parallel for Γ^t_px = -1; the connection is flat with torsion",
       contact_connection},
      {"contact-distribution", "ker η = <∂p, ∂x + p∂t> is not involutive", contact_distribution},
      {"k-cosymplectic-model", "canonical k-cosymplectic model with Reeb vectors R_α = ∂/∂x^α", k_cosymplectic_model},
      {"k-symplectic-model", "canonical 2-symplectic model on R^3", k_symplectic_model},
      {"canonical-models", "every canonical template is accepted and normal-forms to the identity", canonical_models},
      {"standard-multisymplectic", "dp∧dx1∧dx2 is standard with W = <∂p>", standard_nplectic},
      {"degenerate-cases", "cosymplectic structure in dimension one; presymplectic form of rank zero",
       degenerate_cases},
      {"tautological-form", "d(p dq) = dp∧dq", tautological},
  };
  return examples;
}

Json run_corpus(const std::string& filter) {
  Json list = Json::array();
  bool all = true;
  for (const auto& ex : corpus()) {
    if (!filter.empty() && ex.name.find(filter) == std::string::npos) continue;
    CorpusOutcome out;
    try {
      out = ex.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.facts = Json{{"exception", e.what()}};
    }
    all = all && out.pass;
    list.push_back(Json{{"name", ex.name}, {"citation", ex.citation}, {"pass", out.pass}, {"facts", out.facts}});
  }
  return Json{{"examples", list}, {"all_pass", all}, {"count", list.size()}};
}

}  // namespace darboux
