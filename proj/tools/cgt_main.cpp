#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cgt/certify.hpp"
#include "cgt/derive.hpp"
#include "cgt/laws.hpp"
#include "cgt/model.hpp"
#include "cgt/search.hpp"
#include "cgt/tracer.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cgt::Mode resolve_mode(const std::string& flag, const cgt::CurrentGraph& g) {
  if (flag == "cascade") return cgt::Mode::cascade;
  if (flag == "index2") return cgt::Mode::index2;
  return cgt::mode_from_index(g.declared_index);
}

void print_faces(const cgt::CurrentGraph& g) {
  auto faces = cgt::trace_faces(g);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    std::cout << "face " << f << " len " << faces[f].steps.size() << " :";
    for (const auto& st : faces[f].steps)
      std::cout << " e" << st.tail.edge << "." << st.tail.end << (st.alternate ? "-" : "+");
    std::cout << "\n";
    cgt::Log log = cgt::face_log(g, faces[f]);
    std::cout << "log " << f << " len " << log.entries.size() << " :";
    for (const auto& v : log.entries) std::cout << " " << cgt::to_string(v);
    std::cout << "\n";
  }
  std::cout << "orientable " << (cgt::surface_orientable(g) ? "yes" : "no") << "\n";
}

cgt::RotationSystem derive_for_mode(const cgt::CurrentGraph& g, cgt::Mode mode) {
  if (mode == cgt::Mode::cascade) return cgt::normalize_to_pure(cgt::derive_index1(g));
  return cgt::derive_index2(g);
}

int run_pipeline(const std::string& path, const std::string& mode_flag,
                 const std::string& emit_derived) {
  cgt::CurrentGraph g = cgt::parse_current_graph(slurp(path));
  cgt::Mode mode = resolve_mode(mode_flag, g);
  cgt::LawReport rep = cgt::check_laws(g, mode);
  std::cout << "# laws (" << cgt::mode_name(mode) << ")\n" << rep.to_text();
  if (!rep.pass()) {
    std::cerr << "pipeline: law check failed\n";
    return kExitFail;
  }
  cgt::RotationSystem rs = derive_for_mode(g, mode);
  if (!emit_derived.empty()) {
    std::ofstream out(emit_derived, std::ios::binary);
    out << cgt::serialize_rotation_system(rs);
  }
  cgt::Certificate cert = cgt::certify(rs);
  std::cout << "# certificate\n" << cgt::format_certificate(cert);
  return cert.pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"current-graph toolkit: verify, derive and certify triangular embeddings"};
  app.require_subcommand(1);

  std::string input, mode_flag = "auto", out_path, emit_derived, shape = "auto";
  int genus_n = 0;
  int search_s = 1, rungs = -1;
  double budget = 0;
  bool all = false, first = false, progress = false;
  std::size_t limit = 0;

  auto* c_verify = app.add_subcommand("verify", "check the current-graph laws");
  c_verify->add_option("file", input)->required();
  c_verify->add_option("--mode", mode_flag)->check(CLI::IsMember({"auto", "cascade", "index2"}));

  auto* c_trace = app.add_subcommand("trace", "print face-boundary walks and logs");
  c_trace->add_option("file", input)->required();

  auto* c_derive = app.add_subcommand("derive", "emit the derived rotation system");
  c_derive->add_option("file", input)->required();
  c_derive->add_option("--mode", mode_flag)->check(CLI::IsMember({"auto", "cascade", "index2"}));
  c_derive->add_option("-o,--out", out_path, "write to a file instead of stdout");

  auto* c_certify = app.add_subcommand("certify", "certify a pure rotation system");
  c_certify->add_option("file", input)->required();

  auto* c_pipeline = app.add_subcommand("pipeline", "verify, derive and certify in one run");
  c_pipeline->add_option("file", input)->required();
  c_pipeline->add_option("--mode", mode_flag)->check(CLI::IsMember({"auto", "cascade", "index2"}));
  c_pipeline->add_option("--emit-derived", emit_derived, "also write the derived system");

  auto* c_search = app.add_subcommand("search", "search ladder scaffolds for valid assignments");
  c_search->add_option("--s", search_s)->required();
  c_search->add_option("--mode", mode_flag)->check(CLI::IsMember({"cascade", "index2"}))->required();
  c_search->add_option("--rungs", rungs);
  c_search->add_option("--budget", budget, "seconds; 0 = unlimited");
  c_search->add_option("--shape", shape);
  c_search->add_flag("--all", all, "collect every solution");
  c_search->add_flag("--first", first, "stop at the first solution");
  c_search->add_option("--limit", limit, "stop after this many solutions");
  unsigned long long node_cap = 0;
  c_search->add_option("--node-cap", node_cap, "per-shape node cap; 0 = none");
  c_search->add_option("-o,--out", out_path, "directory for solution files");
  c_search->add_flag("--progress", progress);

  auto* c_genus = app.add_subcommand("genus", "print the genus target for K_n");
  c_genus->add_option("--n", genus_n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_verify->parsed()) {
      cgt::CurrentGraph g = cgt::parse_current_graph(slurp(input));
      cgt::Mode mode = resolve_mode(mode_flag, g);
      cgt::LawReport rep = cgt::check_laws(g, mode);
      std::cout << rep.to_text();
      return rep.pass() ? kExitPass : kExitFail;
    }
    if (c_trace->parsed()) {
      cgt::CurrentGraph g = cgt::parse_current_graph(slurp(input));
      print_faces(g);
      return kExitPass;
    }
    if (c_derive->parsed()) {
      cgt::CurrentGraph g = cgt::parse_current_graph(slurp(input));
      cgt::Mode mode = resolve_mode(mode_flag, g);
      cgt::RotationSystem rs = derive_for_mode(g, mode);
      std::string text = cgt::serialize_rotation_system(rs);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
      }
      return kExitPass;
    }
    if (c_certify->parsed()) {
      cgt::RotationSystem rs = cgt::parse_rotation_system(slurp(input));
      cgt::Certificate cert = cgt::certify(rs);
      std::cout << cgt::format_certificate(cert);
      return cert.pass ? kExitPass : kExitFail;
    }
    if (c_pipeline->parsed()) return run_pipeline(input, mode_flag, emit_derived);
    if (c_genus->parsed()) {
      std::cout << cgt::expected_genus(genus_n) << "\n";
      return kExitPass;
    }
    if (c_search->parsed()) {
      cgt::ScaffoldParams params;
      params.s = search_s;
      params.mode = mode_flag == "index2" ? cgt::Mode::index2 : cgt::Mode::cascade;
      params.rung_count = rungs;
      params.end_shape = shape;
      cgt::Scaffold sc = cgt::build_scaffold(params);
      cgt::SearchOptions opt;
      opt.budget_seconds = budget;
      opt.first_only = first && !all;
      opt.max_solutions = limit;
      opt.node_cap_per_shape = node_cap;
      opt.progress = progress;
      cgt::SearchOutcome res = cgt::search(sc, opt);
      if (!out_path.empty() && !res.solutions.empty()) {
        std::filesystem::create_directories(out_path);
        for (std::size_t i = 0; i < res.solutions.size(); ++i) {
          char name[64];
          std::snprintf(name, sizeof name, "%s_s%d_%04zu.cg",
                        cgt::mode_name(sc.mode).c_str(), sc.s, i + 1);
          std::ofstream out(std::filesystem::path(out_path) / name, std::ios::binary);
          out << cgt::serialize(res.solutions[i]);
          std::cout << "wrote " << (std::filesystem::path(out_path) / name).string() << "\n";
        }
      } else {
        for (const auto& g : res.solutions) std::cout << cgt::serialize(g) << "\n";
      }
      std::cout << "solutions " << res.solutions.size() << "\n";
      std::cout << "status "
                << (res.status == cgt::SearchStatus::found            ? "found"
                    : res.status == cgt::SearchStatus::space_exhausted ? "space-exhausted"
                                                                       : "budget-exhausted")
                << "\n";
      std::cerr << "search: shapes " << res.shapes_enumerated << " kept " << res.shapes_searched
                << " nodes " << res.nodes << "\n";
      return res.solutions.empty() ? kExitFail : kExitPass;
    }
  } catch (const cgt::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const cgt::LawViolation& e) {
    std::cerr << e.what() << "\n" << e.report.to_text();
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
