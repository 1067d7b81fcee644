#include "darboux/cli.hpp"

#include <algorithm>
#include <random>

#include "darboux/corpus.hpp"
#include "darboux/report.hpp"
#include "darboux/sampling.hpp"

namespace darboux {

namespace {

CliResult classify_cmd(const SpecDocument& doc) {
  if (doc.type != SpecDocument::Type::linear) throw InputError("classify expects a linear structure spec");
  const StructureSpec& spec = doc.linear;
  const Classification c = classify(spec);
  Json body = classification_json(c, doc.isotropy, spec);
  bool ok = !c.accepted.empty();
  if (spec.kind != StructureKind::unknown) {
    const Verdict v = check(spec.kind, spec);
    body["requested_verdict"] = verdict_json(v);
    ok = v.accepted;
  }
  return {ok ? 0 : 1, envelope("classify", body)};
}

CliResult normalform_cmd(const SpecDocument& doc, const std::optional<unsigned long long>& seed) {
  if (doc.type != SpecDocument::Type::linear) throw InputError("normalform expects a linear structure spec");
  StructureSpec spec = doc.linear;
  Json body = Json::object();
  if (seed) {
    std::mt19937_64 rng(*seed);
    const Mat L = random_invertible(rng, spec.dim);
    spec = spec.pulled_back(L);
    body["randomized"] = Json{{"seed", *seed}, {"L", matrix_to_json(L)}};
  }
  if (spec.kind == StructureKind::unknown) {
    const Classification c = classify(spec);
    if (c.accepted.empty())
      throw StructureError("classification", "no structure kind accepts the input; declare a kind for diagnostics");
    spec.kind = c.accepted.front();
  }
  const Verdict v = check(spec.kind, spec);
  if (!v.accepted) {
    const Clause* f = v.first_failure();
    body["verdict"] = verdict_json(v);
    body.update(error_json("structure", f ? f->note : "rejected", f ? f->name : ""));
    return {1, envelope("normalform", body)};
  }
  body["kind"] = to_string(spec.kind);
  body["normal_form"] = darboux_json(normal_form(spec));
  return {0, envelope("normalform", body)};
}

CliResult chart_cmd(const SpecDocument& doc, const std::optional<std::string>& points) {
  if (doc.type != SpecDocument::Type::chart) throw InputError("chart-check expects a chart spec");
  std::optional<std::vector<Vec>> pts;
  if (points) pts = parse_points(*points, doc.chart.chart.size());
  return {0, envelope("chart-check", chart_report(doc.chart, pts))};
}

CliResult connection_cmd(const SpecDocument& doc) {
  if (doc.type != SpecDocument::Type::connection) throw InputError("connection-check expects a connection spec");
  return {0, envelope("connection-check", connection_report(doc.connection))};
}

}  // namespace

CliResult run(const CliOptions& opts) {
  try {
    if (opts.command == "corpus") {
      Json body = run_corpus(opts.filter);
      if (body["count"] == 0) throw InputError("no corpus example matches filter '" + opts.filter + "'");
      const bool ok = body["all_pass"].get<bool>();
      return {ok ? 0 : 1, envelope("corpus", std::move(body))};
    }
    const SpecDocument doc = read_spec_file(opts.path);
    if (opts.command == "classify") return classify_cmd(doc);
    if (opts.command == "normalform") return normalform_cmd(doc, opts.seed);
    if (opts.command == "chart-check") return chart_cmd(doc, opts.points);
    if (opts.command == "connection-check") return connection_cmd(doc);
    throw InputError("unknown command '" + opts.command + "'");
  } catch (const InputError& e) {
    return {2, envelope(opts.command, error_json("input", e.what()))};
  } catch (const StructureError& e) {
    return {1, envelope(opts.command, error_json("structure", e.what(), e.clause()))};
  }
}

std::string render(const CliResult& r, OutputFormat format) {
  return format == OutputFormat::machine ? dump_json(r.report) : render_human(r.report);
}

}  // namespace darboux
