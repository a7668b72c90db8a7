#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "flagkit/harness.hpp"
#include "flagkit/hvector.hpp"

namespace fk = flagkit;
namespace hs = flagkit::harness;
using fk::io::Json;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kMismatch = 2 };

struct Output {
  std::string format = "json";
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw fk::Error(fk::Errc::BadParameter, "cannot write " + path);
    out << text << '\n';
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw fk::Error(fk::Errc::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json stats_json(const std::string& name, const fk::SimplicialComplex& c) {
  const fk::FVector f = c.f_vector();
  Json row{{"name", name}, {"d", f.size() - 1}, {"f", f.entries()}, {"h", fk::h_vector(f)}};
  try {
    const fk::SymmetricHVector h(fk::h_vector(f));
    row["gamma"] = fk::gamma_vector(h);
    row["g"] = fk::io::to_json(fk::g_poly(h));
    row["P"] = fk::io::to_json(fk::p_poly(h));
  } catch (const fk::Error&) {
    row["gamma"] = nullptr;
  }
  return row;
}

std::string suite_csv(const std::vector<hs::SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,input,identity,holds\n";
  auto q = [](const std::string& s) {
    std::string r = "\"";
    for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return r + "\"";
  };
  for (const auto& r : reports) {
    for (const auto& c : r.cases) {
      for (const auto& v : c.verdicts) out << r.suite << ',' << q(c.input) << ',' << q(v.identity) << ',' << v.holds << '\n';
    }
  }
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

int exit_for(const std::vector<hs::SuiteReport>& reports) {
  bool mismatch = false;
  for (const auto& r : reports) {
    if (r.ok()) continue;
    if (r.kind == hs::SuiteKind::hard) return kFailure;
    mismatch = true;
  }
  return mismatch ? kMismatch : kOk;
}

Json canonical(const Json& j) {
  if (j.contains("facets")) return fk::io::to_json(fk::io::complex_from_json(j));
  if (j.contains("elements")) return fk::io::to_json(fk::io::poset_from_json(j));
  if (j.contains("vertex_partition")) {
    const auto [dec, part] = fk::io::decomposition_from_json(j);
    return fk::io::to_json(dec, part);
  }
  if (j.contains("Q")) return fk::io::to_json(fk::io::triple_from_json(j));
  throw fk::Error(fk::Errc::ParseError, "unrecognized document: expected a complex, poset, decomposition or triple");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Face-number identities for flag spheres, Tchebyshev triangulations and mirror complexes"};
  app.require_subcommand(1);

  Output output;
  hs::SuiteConfig config;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", output.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", output.path, "write to this file instead of stdout");
  };

  std::vector<std::string> names;
  auto* gen = app.add_subcommand("gen", "emit a named complex, e.g. C5, C5*C7, X3, S(C4)");
  gen->add_option("names", names, "complex names")->required();
  add_output(gen);

  auto* stats = app.add_subcommand("stats", "f, h, gamma, g and P of named complexes");
  stats->add_option("names", names, "complex names")->required();
  add_output(stats);

  std::string suite_name;
  bool sequential = false;
  auto* suite = app.add_subcommand("suite", "run an identity suite, or all of them");
  suite->add_option("name", suite_name, "suite name or 'all'")->required();
  suite->add_option("--max-n", config.max_n, "largest cycle length in cycle families (4..16)");
  suite->add_option("--seed", config.seed, "seed for random vertex orders");
  suite->add_option("--orders", config.orders, "random orders per triangulation check (1..20)");
  suite->add_option("--witness-vertices", config.witness_vertices, "vertex budget for witness searches (1..8)");
  suite->add_flag("--sequential", sequential, "evaluate cases on the calling thread");
  add_output(suite);

  std::string delta_name = "C5";
  std::string reading_text = "full";
  auto* search = app.add_subcommand("search-gamma-witness", "look for a balanced complex attached to h(Δ)");
  search->add_option("--delta", delta_name, "complex name of Δ");
  search->add_option("--reading", reading_text, "full, truncated or doubled")
      ->check(CLI::IsMember({"full", "truncated", "doubled"}));
  search->add_option("--max-vertices", config.witness_vertices, "vertex budget (1..8)");
  add_output(search);

  std::string input = "-";
  auto* io = app.add_subcommand("io", "read a JSON document and re-emit it canonically");
  io->add_option("input", input, "file path, or - for stdin");
  add_output(io);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      Json out = Json::array();
      std::vector<std::string> rows{fk::io::csv_header()};
      for (const auto& n : names) {
        const fk::SimplicialComplex c = hs::parse_complex_name(n);
        out.push_back(Json{{"name", n}, {"complex", fk::io::to_json(c)}});
        rows.push_back(fk::io::csv_row(n, c));
      }
      if (output.format == "csv") {
        std::string text;
        for (const auto& r : rows) text += (text.empty() ? "" : "\n") + r;
        output.write(text);
      } else {
        output.write(fk::io::dump(names.size() == 1 ? out[0]["complex"] : out));
      }
      return kOk;
    }
    if (*stats) {
      if (output.format == "csv") {
        std::string text = fk::io::csv_header();
        for (const auto& n : names) text += "\n" + fk::io::csv_row(n, hs::parse_complex_name(n));
        output.write(text);
      } else {
        Json out = Json::array();
        for (const auto& n : names) out.push_back(stats_json(n, hs::parse_complex_name(n)));
        output.write(out.dump(2));
      }
      return kOk;
    }
    if (*suite) {
      config.concurrent = !sequential;
      config.validate();
      std::vector<hs::SuiteReport> reports;
      if (suite_name == "all") {
        for (const auto& n : hs::suite_names()) reports.push_back(hs::run_suite(n, config));
      } else {
        reports.push_back(hs::run_suite(suite_name, config));
      }
      const int code = exit_for(reports);
      if (output.format == "csv") {
        output.write(suite_csv(reports));
      } else {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(r.to_json());
        output.write(Json{{"reports", all}, {"exit_code", code}}.dump(2));
      }
      return code;
    }
    if (*search) {
      config.validate();
      const fk::SymmetricHVector h = fk::symmetric_h(hs::parse_complex_name(delta_name));
      const hs::Reading reading = hs::parse_reading(reading_text);
      const hs::TargetVector target = hs::target_for(h, reading);
      const auto w = hs::search_gamma_witness(
          target.f, reading == hs::Reading::full ? std::optional<int>(h.d()) : std::nullopt, config.witness_vertices);
      Json out{{"delta", delta_name}, {"reading", reading_text}, {"target_f", target.f}, {"found", w.has_value()}};
      if (!target.conflict.empty()) out["conflict"] = target.conflict;
      if (w) {
        out["complex"] = fk::io::to_json(w->gamma.complex());
        out["colors"] = w->gamma.colors();
        out["D"] = w->gamma.D();
        out["route"] = w->route;
      }
      output.write(out.dump(2));
      return w ? kOk : kMismatch;
    }
    if (*io) {
      const Json doc = fk::io::parse(read_input(input));
      output.write(fk::io::dump(canonical(doc)));
      return kOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
