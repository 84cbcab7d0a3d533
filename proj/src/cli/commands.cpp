#include "fsp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fsp/error.hpp"
#include "fsp/factorize.hpp"
#include "fsp/rdf/ntriples.hpp"
#include "fsp/rdf/queries.hpp"

namespace fsp::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

rdf::Graph load(const std::string& path, const RunConfig& config) {
  const rdf::Term type = rdf::Term::iri(config.type_predicate);
  if (path.empty() || path == "-") return rdf::parse_ntriples(std::cin, type);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return rdf::parse_ntriples(in, type);
}

rdf::Graph load_nonempty(const RunConfig& config) {
  rdf::Graph g = load(config.input_path, config);
  if (g.empty()) throw ParseError("input contains no triples", 1, 1);
  return g;
}

rdf::Term require_class(const rdf::Graph& g, const RunConfig& config) {
  if (config.class_iri.empty()) throw PreconditionError("--class is required");
  rdf::Term cls = rdf::Term::iri(config.class_iri);
  if (stats::instance_count(g, cls) == 0) {
    throw NoCandidateError("class " + cls.to_ntriples() + " has no instances");
  }
  return cls;
}

rdf::PropertyList to_properties(const std::vector<std::string>& iris) {
  rdf::PropertyList out;
  for (const std::string& iri : iris) out.push_back(rdf::Term::iri(iri));
  return rdf::canonical(std::move(out));
}

json iris(const rdf::PropertyList& props) {
  json a = json::array();
  for (const rdf::Term& p : props) a.push_back(p.lexical());
  return a;
}

std::string brace(const rdf::PropertyList& props) {
  std::string s = "{";
  for (std::size_t i = 0; i < props.size(); ++i) {
    if (i) s += ", ";
    s += props[i].to_ntriples();
  }
  return s + "}";
}

std::string percent(double v) {
  std::ostringstream os;
  os << std::showpos << std::fixed << std::setprecision(1) << v;
  return os.str();
}

const char* name(Algorithm a) { return a == Algorithm::efsp ? "efsp" : "gfsp"; }

void check(const rdf::Graph& g, const rdf::Term& cls, const rdf::PropertyList& s,
           const RunConfig& config, std::ostream& err) {
  const detect::Diagnostics d = detect::check_assumptions(g, cls, s);
  if (d.ok()) return;
  for (const detect::Violation& v : d.violations) {
    err << (v.kind == detect::Violation::Kind::completeness ? "incomplete: "
                                                            : "non-functional: ")
        << v.entity.to_ntriples() << ' ' << v.property.to_ntriples() << '\n';
  }
  if (config.strict_assumptions) {
    throw AssumptionViolation(std::to_string(d.violations.size()) +
                              " assumption violation(s) in strict mode");
  }
  err << "warning: " << d.violations.size()
      << " assumption violation(s); incomplete entities are left unfactorized\n";
}

struct Detection {
  detect::DetectionResult result;
  double millis = 0;
};

Detection run_detection(const rdf::Graph& g, const rdf::Term& cls,
                        const rdf::PropertyList& s, const RunConfig& config) {
  if (s.size() < 2) {
    throw NoCandidateError("class " + cls.to_ntriples() +
                           " has fewer than two properties to search");
  }
  const auto start = std::chrono::steady_clock::now();
  Detection d;
  if (config.algorithm == Algorithm::efsp) {
    detect::PatternSpace space;
    try {
      space = detect::enumerate_pattern_space(g, cls, s, config.subset_cap);
    } catch (const PreconditionError& e) {
      throw NoCandidateError(e.what());
    }
    d.result = detect::efsp(space, g, cls, s);
  } else {
    d.result = detect::gfsp(g, cls, s);
  }
  d.millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  return d;
}

json report_json(const factor::FactorizationReport& r) {
  return {{"convention", std::string(stats::to_string(r.convention))},
          {"nn_before", r.nn_before},
          {"nn_after", r.nn_after},
          {"nle_before", r.nle_before},
          {"nle_after", r.nle_after},
          {"percent_savings", r.percent_savings}};
}

bool to_stdout(const std::string& path) { return path == "-"; }

// Reports go to stderr whenever stdout carries the data itself.
std::ostream& report_stream(const std::string& output_path, std::ostream& out,
                            std::ostream& err) {
  return to_stdout(output_path) ? err : out;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (!path.empty()) write_atomically(path, content, out);
}

template <typename Body>
int guarded(const char* command, std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << command << ": parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const AssumptionViolation& e) {
    err << command << ": " << e.what() << '\n';
    return kAssumptionViolation;
  } catch (const NoCandidateError& e) {
    err << command << ": " << e.what() << '\n';
    return kNoCandidate;
  } catch (const IoError& e) {
    err << command << ": " << e.what() << '\n';
    return kIoError;
  } catch (const IntegrityError& e) {
    err << command << ": " << e.what() << '\n';
    return kIntegrityError;
  } catch (const PreconditionError& e) {
    err << command << ": " << e.what() << '\n';
    return kParseError;
  } catch (const UndefinedValueError& e) {
    err << command << ": " << e.what() << '\n';
    return kNoCandidate;
  }
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content,
                      std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto " + path);
  }
}

int cmd_detect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded("detect", err, [&] {
    const rdf::Graph g = load_nonempty(config);
    const rdf::Term cls = require_class(g, config);
    const rdf::PropertyList s = config.properties ? to_properties(*config.properties)
                                                  : rdf::class_properties(g, cls);
    check(g, cls, s, config, err);
    const Detection d = run_detection(g, cls, s, config);
    const detect::DetectionResult& r = d.result;

    out << "algorithm: " << name(config.algorithm) << '\n'
        << "class: " << cls.to_ntriples() << '\n'
        << "properties: " << brace(s) << '\n'
        << "SP: " << brace(r.best_properties) << '\n'
        << "AMI: " << r.objective.ami << '\n'
        << "#Edges: " << r.objective.edges_value << '\n'
        << "factorized edges: " << r.objective.factorized_edge_count << '\n'
        << "PSIterations: " << r.trace.size() << '\n'
        << "Exec.Time(ms): " << d.millis << '\n'
        << "trace:\n";
    json trace = json::array();
    for (const detect::TraceEntry& t : r.trace) {
      out << "  " << brace(t.subset) << " -> " << t.value << " (AMI " << t.ami << ")\n";
      trace.push_back({{"subset", iris(t.subset)}, {"value", t.value}, {"ami", t.ami}});
    }
    json record = {{"command", "detect"},
                   {"algorithm", name(config.algorithm)},
                   {"class", cls.lexical()},
                   {"properties", iris(s)},
                   {"sp", iris(r.best_properties)},
                   {"ami", r.objective.ami},
                   {"edges", r.objective.edges_value},
                   {"factorized_edges", r.objective.factorized_edge_count},
                   {"ps_iterations", r.trace.size()},
                   {"exec_time_ms", d.millis},
                   {"trace", trace}};
    out << record.dump() << '\n';
    return kOk;
  });
}

int cmd_factorize(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded("factorize", err, [&] {
    const rdf::Graph g = load_nonempty(config);
    const rdf::Term cls = require_class(g, config);
    const rdf::PropertyList s = rdf::class_properties(g, cls);
    rdf::PropertyList sp;
    if (config.properties) {
      sp = to_properties(*config.properties);
      check(g, cls, sp, config, err);
    } else {
      check(g, cls, s, config, err);
      sp = run_detection(g, cls, s, config).result.best_properties;
    }
    const factor::Options options{rdf::Term::iri(config.instance_of)};
    const factor::Factorization f = factor::factorize(g, cls, sp, options);
    for (const std::string& w : f.warnings) err << "warning: " << w << '\n';

    write_output(config.output_path, rdf::serialize_ntriples(f.graph), out);
    write_output(config.mapping_path,
                 rdf::serialize_ntriples(factor::mapping_graph(f.mapping, options)), out);
    std::ostream& rep = report_stream(config.output_path, out, err);

    const rdf::PropertyList report_props = rdf::canonical([&] {
      rdf::PropertyList all = s;
      all.insert(all.end(), sp.begin(), sp.end());
      return all;
    }());
    const auto chosen = factor::report(g, f.graph, cls, report_props, config.convention, options);
    json by_convention = json::array();
    for (auto c : {stats::EdgeConvention::with_type_edges,
                   stats::EdgeConvention::without_type_edges}) {
      by_convention.push_back(report_json(factor::report(g, f.graph, cls, report_props, c, options)));
    }
    rep << "class: " << cls.to_ntriples() << '\n'
        << "SP: " << brace(sp) << '\n'
        << "surrogates: " << f.mapping.surrogate_count() << '\n'
        << "mapped entities: " << f.mapping.pairs.size() << '\n'
        << "convention: " << stats::to_string(chosen.convention) << '\n'
        << "NN: " << chosen.nn_before << " -> " << chosen.nn_after << '\n'
        << "NLE: " << chosen.nle_before << " -> " << chosen.nle_after << '\n'
        << "%Savings: " << percent(chosen.percent_savings) << '\n';
    json record = {{"command", "factorize"},
                   {"class", cls.lexical()},
                   {"sp", iris(sp)},
                   {"surrogates", f.mapping.surrogate_count()},
                   {"mapped_entities", f.mapping.pairs.size()},
                   {"report", report_json(chosen)},
                   {"reports", by_convention}};
    rep << record.dump() << '\n';
    return kOk;
  });
}

int cmd_expand(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded("expand", err, [&] {
    const rdf::Graph g = load(config.input_path, config);
    const factor::Options options{rdf::Term::iri(config.instance_of)};
    std::optional<factor::EntityMapping> hint;
    if (!config.mapping_path.empty()) {
      const rdf::Graph m = load(config.mapping_path, config);
      hint.emplace();
      for (const rdf::IdTriple& t : m.triples()) {
        const rdf::Triple tr = m.resolve(t);
        if (!(tr.predicate == options.instance_of)) continue;
        auto [it, fresh] = hint->pairs.emplace(tr.subject, tr.object);
        if (!fresh && !(it->second == tr.object)) {
          throw IntegrityError("functionality violated in mapping: " +
                               tr.subject.to_ntriples() + " has two surrogates");
        }
      }
    }
    const rdf::Graph expanded = factor::expand(g, hint ? &*hint : nullptr, options);
    write_output(config.output_path, rdf::serialize_ntriples(expanded), out);
    std::ostream& rep = report_stream(config.output_path, out, err);
    rep << "triples: " << g.size() << " -> " << expanded.size() << '\n';
    json record = {{"command", "expand"},
                   {"triples_in", g.size()},
                   {"triples_out", expanded.size()}};
    rep << record.dump() << '\n';
    return kOk;
  });
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded("stats", err, [&] {
    const rdf::Graph g = load(config.input_path, config);
    std::vector<rdf::Term> classes;
    if (!config.class_iri.empty()) {
      classes.push_back(rdf::Term::iri(config.class_iri));
    } else {
      std::set<rdf::Term> seen;
      for (const rdf::IdTriple& t : g.triples()) {
        if (t.predicate == g.type_predicate_id()) seen.insert(g.term(t.object));
      }
      classes.assign(seen.begin(), seen.end());
    }
    json record = {{"command", "stats"}, {"triples", g.size()}, {"classes", json::array()}};
    out << "triples: " << g.size() << '\n';
    for (const rdf::Term& cls : classes) {
      const rdf::PropertyList props = rdf::class_properties(g, cls);
      const auto am = stats::instance_count(g, cls);
      const auto with = stats::nle(g, cls, props, stats::EdgeConvention::with_type_edges);
      const auto without = stats::nle(g, cls, props, stats::EdgeConvention::without_type_edges);
      out << "class " << cls.to_ntriples() << '\n'
          << "  AM: " << am << '\n'
          << "  properties: " << brace(props) << '\n'
          << "  NLE with-type: " << with << '\n'
          << "  NLE without-type: " << without << '\n';
      json jc = {{"class", cls.lexical()},
                 {"am", am},
                 {"properties", iris(props)},
                 {"nle_with_type", with},
                 {"nle_without_type", without},
                 {"histograms", json::object()}};
      for (const rdf::Term& p : props) {
        const auto hist = stats::repetition_histogram(g, cls, p);
        std::vector<std::pair<rdf::Term, double>> ranked(hist.begin(), hist.end());
        std::stable_sort(ranked.begin(), ranked.end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        if (ranked.size() > config.top_k) ranked.resize(config.top_k);
        out << "  " << p.to_ntriples() << " (" << hist.size() << " distinct objects)\n";
        json jh = json::array();
        for (const auto& [o, pct] : ranked) {
          out << "    " << o.to_ntriples() << ' ' << std::fixed << std::setprecision(2)
              << pct << "%\n";
          out.unsetf(std::ios::floatfield);
          jh.push_back({{"object", o.to_ntriples()}, {"percent", pct}});
        }
        jc["histograms"][p.lexical()] = {{"distinct", hist.size()}, {"top", jh}};
      }
      record["classes"].push_back(jc);
    }
    out << record.dump() << '\n';
    return kOk;
  });
}

int cmd_generate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded("generate", err, [&] {
    const rdf::Graph g = gen::generate(config.generator, config.seed);
    const std::string path = config.output_path.empty() ? "-" : config.output_path;
    write_atomically(path, rdf::serialize_ntriples(g), out);
    const gen::GeneratorSpec& s = config.generator;
    json record = {{"command", "generate"},
                   {"class", gen::class_iri(s)},
                   {"entities", s.num_entities},
                   {"properties", s.num_properties},
                   {"repetition_skew", s.repetition_skew},
                   {"value_cardinality", s.value_cardinality},
                   {"distinct_tuples", gen::distinct_tuples(s)},
                   {"seed", config.seed},
                   {"triples", g.size()}};
    report_stream(path, out, err) << record.dump() << '\n';
    return kOk;
  });
}

}  // namespace fsp::cli
