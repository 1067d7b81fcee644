#include "darboux/report.hpp"

#include <sstream>

namespace darboux {

Json envelope(const std::string& command, Json body) {
  body["schema"] = kReportSchema;
  body["command"] = command;
  return body;
}

Json error_json(const std::string& type, const std::string& message, const std::string& clause) {
  Json e{{"type", type}, {"message", message}};
  if (!clause.empty()) e["clause"] = clause;
  return Json{{"error", e}};
}

Json params_json(const StructureParams& p) {
  Json j = Json::object();
  if (p.k) j["k"] = *p.k;
  if (p.n) j["n"] = *p.n;
  if (p.d) j["d"] = *p.d;
  if (p.r) j["r"] = *p.r;
  if (p.degree) j["degree"] = *p.degree;
  return j;
}

Json verdict_json(const Verdict& v) {
  Json clauses = Json::array();
  for (const auto& c : v.clauses) {
    Json cj{{"name", c.name}, {"citation", c.citation}, {"pass", c.pass}};
    if (!c.witness.empty()) cj["witness"] = vectors_to_json(c.witness);
    if (!c.note.empty()) cj["note"] = c.note;
    clauses.push_back(cj);
  }
  Json j{{"kind", to_string(v.kind)}, {"accepted", v.accepted}, {"clauses", clauses}, {"params", params_json(v.params)}};
  Json data = Json::object();
  for (const auto& [k, vs] : v.data) data[k] = vectors_to_json(vs);
  if (!data.empty()) j["data"] = data;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json classification_json(const Classification& c, const std::optional<IsotropyQuery>& isotropy,
                         const StructureSpec& spec) {
  Json verdicts = Json::array();
  for (const auto& v : c.verdicts) verdicts.push_back(verdict_json(v));
  Json accepted = Json::array();
  for (auto k : c.accepted) accepted.push_back(to_string(k));
  Json j{{"requested", to_string(spec.kind)}, {"dim", spec.dim}, {"accepted", accepted}, {"verdicts", verdicts}};
  if (c.standard) j["standard"] = verdict_json(*c.standard);
  if (isotropy) {
    const AltForm* form = spec.big_omega ? &*spec.big_omega : (spec.omegas.size() == 1 ? &spec.omegas[0] : nullptr);
    if (!form) throw InputError("isotropy query needs a single form (Omega or omega)");
    const Subspace perp = r_orthogonal(isotropy->W, *form, isotropy->r);
    j["isotropy"] = Json{{"r", isotropy->r},
                         {"W", vectors_to_json(isotropy->W.basis())},
                         {"W_perp", vectors_to_json(perp.basis())},
                         {"type", to_string(isotropy_type(isotropy->W, *form, isotropy->r))}};
  }
  return j;
}

Json template_json(const CanonicalTemplate& t) {
  Json sets = Json::array();
  for (const auto& s : t.index_sets) {
    Json one = Json::array();
    for (auto i : s) one.push_back(i + 1);
    sets.push_back(one);
  }
  Json j{{"kind", to_string(t.kind)}, {"dim", t.dim()}, {"d", t.d}};
  switch (t.kind) {
    case TemplateKind::symplectic:
    case TemplateKind::cosymplectic: j["n"] = t.n; break;
    case TemplateKind::presymplectic:
    case TemplateKind::precosymplectic: j["r"] = t.r; break;
    default:
      j["k"] = t.k;
      j["n"] = t.n;
      j["r"] = t.r_alpha();
      j["index_sets"] = sets;
  }
  return j;
}

Json darboux_json(const DarbouxReport& r) {
  Json j{{"template", template_json(r.tmpl)}, {"frame", matrix_to_json(r.frame.change())}, {"verified", r.verified}};
  if (!r.reeb.empty()) j["reeb"] = vectors_to_json(r.reeb);
  if (r.reeb_freedom) j["reeb_freedom"] = vectors_to_json(r.reeb_freedom->basis());
  if (r.splitting) {
    Json va = Json::array();
    for (const auto& v : r.splitting->v_alpha) va.push_back(vectors_to_json(v.basis()));
    j["splitting"] = Json{{"V_alpha", va}, {"D", vectors_to_json(r.splitting->d.basis())}};
  }
  return j;
}

Json tensor_json(const TensorField& t) {
  Json comps = Json::array();
  const std::size_t n = t.chart.size();
  for (std::size_t pos = 0; pos < t.components.size(); ++pos) {
    const Poly& p = t.components[pos];
    if (p.is_zero()) continue;
    std::vector<std::size_t> idx(t.rank());
    std::size_t rest = pos;
    for (std::size_t i = t.rank(); i-- > 0;) {
      idx[i] = rest % n;
      rest /= n;
    }
    Json up = Json::array(), down = Json::array();
    for (std::size_t i = 0; i < t.rank(); ++i) (i < t.contravariant ? up : down).push_back(t.chart[idx[i]]);
    comps.push_back(Json{{"upper", up}, {"lower", down}, {"value", to_string(p, t.chart)}});
  }
  return Json{{"zero", comps.empty()}, {"components", comps}};
}

namespace {

Json form_facts(const PolyForm& f, const std::vector<Vec>& points) {
  Json j{{"form", to_string(f)}, {"degree", f.degree()}, {"closed", is_closed(f)},
         {"d", to_string(exterior_derivative(f))}};
  if (f.degree() == 2) {
    j["generic_rank"] = generic_rank(f);
    Json pts = Json::array();
    const auto ranks = rank_profile(f, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const Subspace ker = kernel_distribution(f, points[i]);
      pts.push_back(Json{{"point", vec_to_json(points[i])}, {"rank", ranks[i]}, {"kernel", vectors_to_json(ker.basis())}});
    }
    j["points"] = pts;
  } else if (f.degree() >= 1) {
    Json pts = Json::array();
    for (const auto& p : points)
      pts.push_back(Json{{"point", vec_to_json(p)}, {"one_kernel", vectors_to_json(kernel_distribution(f, p).basis())}});
    j["points"] = pts;
  }
  return j;
}

}  // namespace

Json chart_report(const ChartBundle& b, const std::optional<std::vector<Vec>>& points_override) {
  const std::vector<Vec>& points = points_override ? *points_override : b.points;
  Json forms = Json::object();
  for (const auto& [name, f] : b.forms) forms[name] = form_facts(f, points);
  Json fields = Json::object();
  for (const auto& [name, X] : b.vector_fields) fields[name] = to_string(X);
  Json dists = Json::object();
  for (const auto& [name, gens] : b.distributions) {
    std::vector<PolyVectorField> D;
    for (const auto& g : gens) D.push_back(b.vector_fields.at(g));
    const auto rep = frobenius_involutive(D, points);
    Json brackets = Json::array();
    for (std::size_t i = 0; i < D.size(); ++i)
      for (std::size_t k = i + 1; k < D.size(); ++k)
        brackets.push_back(Json{{"pair", {gens[i], gens[k]}}, {"bracket", to_string(lie_bracket(D[i], D[k]))}});
    Json pts = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
      pts.push_back(Json{{"point", vec_to_json(points[i])}, {"involutive", static_cast<bool>(rep.at_points[i])}});
    dists[name] = Json{{"generators", gens}, {"involutive", rep.generic}, {"brackets", brackets}, {"points", pts}};
  }
  Json maps = Json::object();
  for (const auto& [name, e] : b.maps) {
    Json pulled = Json::object();
    for (const auto& f : e.pullback) pulled[f] = form_facts(pullback_map(e.map, b.forms.at(f)), e.points);
    maps[name] = Json{{"source", e.map.source}, {"pullbacks", pulled}};
  }
  Json pts = Json::array();
  for (const auto& p : points) pts.push_back(vec_to_json(p));
  return Json{{"chart", b.chart}, {"points", pts}, {"forms", forms}, {"vector_fields", fields},
              {"distributions", dists}, {"maps", maps}};
}

Json connection_report(const ConnectionBundle& b) {
  const Connection& c = b.connection;
  const TensorField T = torsion(c);
  const TensorField R = curvature(c);
  Json forms = Json::object();
  for (const auto& [name, f] : b.forms) {
    const TensorField nf = covariant_derivative_form(c, f);
    forms[name] = Json{{"form", to_string(f)}, {"closed", is_closed(f)}, {"parallel", nf.is_zero()},
                       {"covariant_derivative", tensor_json(nf)}};
  }
  return Json{{"chart", c.chart()}, {"torsion", tensor_json(T)}, {"torsion_free", T.is_zero()},
              {"curvature", tensor_json(R)}, {"flat", R.is_zero()}, {"forms", forms}};
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

std::string inline_array(const Json& j) {
  std::string s = "(";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
  return s + ")";
}

void render(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_scalar(v)) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else if (is_flat_array(v)) {
        out << pad << k << ": " << inline_array(v) << "\n";
      } else if (v.empty()) {
        out << pad << k << ": (none)\n";
      } else {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_scalar(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else if (is_flat_array(v)) {
        out << pad << "- " << inline_array(v) << "\n";
      } else {
        out << pad << "-\n";
        render(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_human(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace darboux
