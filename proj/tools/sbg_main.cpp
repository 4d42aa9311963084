// sbg: detection, decomposition and spanning-subgraph approximation for
// 2-vertex strongly biconnected directed graphs.
//
// Exit codes: 0 property holds / success, 1 property fails,
//             2 input error, 3 result not proven optimal.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbg/approx.hpp"
#include "sbg/connectivity.hpp"
#include "sbg/dot.hpp"
#include "sbg/exact.hpp"
#include "sbg/fixtures.hpp"
#include "sbg/graph.hpp"
#include "sbg/sparsify.hpp"
#include "sbg/strong_biconnectivity.hpp"

namespace fs = std::filesystem;

namespace {

sbg::Digraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  try {
    return sbg::Digraph::from_edge_list(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    std::exit(2);
  }
}

sbg::DeletionOrder parse_order(const std::string& order, std::uint64_t seed) {
  sbg::DeletionOrder d;
  d.seed = seed;
  if (order == "input")
    d.mode = sbg::OrderMode::input;
  else if (order == "lex")
    d.mode = sbg::OrderMode::lexicographic;
  else if (order == "random")
    d.mode = sbg::OrderMode::random;
  else {
    std::cerr << "error: unknown order \"" << order << "\"\n";
    std::exit(2);
  }
  return d;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(2);
  }
  out << content;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

int run_check(const std::string& file, const std::string& property) {
  sbg::Digraph g = load_graph(file);
  bool holds;
  if (property == "sc")
    holds = sbg::is_strongly_connected(g);
  else if (property == "bicon")
    holds = sbg::is_biconnected(sbg::underlying(g));
  else if (property == "sb")
    holds = sbg::is_strongly_biconnected(g);
  else if (property == "2vc")
    holds = sbg::is_2vc_digraph(g);
  else if (property == "2vsb")
    holds = sbg::is_2vsb(g);
  else if (property == "3vc-underlying")
    holds = sbg::is_3vc_ugraph(sbg::underlying(g));
  else {
    std::cerr << "error: unknown property \"" << property << "\"\n";
    return 2;
  }
  std::cout << (holds ? "true" : "false") << "\n";
  return holds ? 0 : 1;
}

int run_sbcc(const std::string& file) {
  sbg::Digraph g = load_graph(file);
  sbg::SbccDecomposition d = sbg::sbcc(g);
  for (const auto& comp : d.components) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      std::cout << (i ? " " : "") << comp[i];
    std::cout << "\n";
  }
  std::cout << "t=" << d.t << "\n";
  return 0;
}

int run_bap(const std::string& file) {
  sbg::Digraph g = load_graph(file);
  if (!sbg::is_strongly_biconnected(g)) {
    std::cerr << "error: input not strongly biconnected\n";
    return 2;
  }
  sbg::BapReport r = sbg::b_articulation_points(g);
  for (std::size_t i = 0; i < r.points.size(); ++i)
    std::cout << (i ? " " : "") << r.points[i];
  std::cout << "\n";
  std::cout << "l=" << r.l << "\n";
  return 0;
}

std::string arcs_to_text(const std::vector<sbg::Arc>& arcs) {
  std::vector<sbg::Arc> sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& a : sorted)
    out += std::to_string(a.first) + " " + std::to_string(a.second) + "\n";
  return out;
}

int run_approx(const std::string& file, const std::string& method,
               const std::string& order, std::uint64_t seed,
               const std::string& out_path) {
  sbg::Digraph g = load_graph(file);
  if (!sbg::is_2vsb(g)) {
    std::cerr << "error: input not 2-vertex strongly biconnected\n";
    return 2;
  }
  sbg::DeletionOrder ord = parse_order(order, seed);
  std::vector<sbg::Arc> arcs;
  int l, bound;
  if (method == "alg1") {
    sbg::ApproxResult r = sbg::approx_m2vsbss_alg1(g, ord);
    arcs = r.arcs;
    l = r.l;
    bound = r.bound;
  } else if (method == "union") {
    sbg::UnionResult r = sbg::union_algorithm(g, ord);
    arcs = r.union_arcs;
    l = sbg::b_articulation_points(g.subgraph_with_arcs(r.core_arcs)).l;
    bound = 7 * g.n();
  } else {
    std::cerr << "error: unknown method \"" << method << "\"\n";
    return 2;
  }
  write_output(out_path, arcs_to_text(arcs));
  std::cerr << "n=" << g.n() << " m=" << g.m() << " l=" << l
            << " result=" << arcs.size() << " bound=" << bound
            << " lb=" << 2 * g.n() << "\n";
  return 0;
}

int run_exact(const std::string& file, int max_n, int max_m,
              std::int64_t time_limit_ms, const std::string& out_path) {
  sbg::Digraph g = load_graph(file);
  if (!sbg::is_2vsb(g)) {
    std::cerr << "error: input not 2-vertex strongly biconnected\n";
    return 2;
  }
  sbg::ExactLimits limits{max_n, max_m, time_limit_ms};
  sbg::ExactResult r = sbg::exact_m2vsbss(g, limits);
  write_output(out_path, arcs_to_text(r.arcs));
  std::cerr << "size=" << r.size << " proven="
            << (r.proven_optimal ? "true" : "false") << "\n";
  return r.proven_optimal ? 0 : 3;
}

int run_gen(const std::string& kind, int n, int extra_arcs, std::uint64_t seed,
            const std::string& out_path) {
  try {
    sbg::Digraph g = (kind == "random2vsb")
                         ? sbg::random_2vsb(n, extra_arcs, seed)
                         : sbg::fixture(kind);
    write_output(out_path, g.to_edge_list());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_dot(const std::string& file, const std::string& highlight_file,
            const std::string& out_path) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot open " << file << "\n";
    return 2;
  }
  try {
    sbg::Digraph g = sbg::Digraph::from_edge_list(in);
    std::vector<sbg::Arc> highlight;
    if (!highlight_file.empty())
      highlight = load_graph(highlight_file).arcs();
    write_output(out_path, sbg::to_dot(g, highlight));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 2;
  }
}

std::string format_ratio(double r) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << r;
  return os.str();
}

int run_bench(const std::string& dir, const std::string& methods_csv,
              const std::string& orders_csv, const std::string& seeds_csv,
              bool with_exact, int max_n, int max_m, std::int64_t time_limit_ms,
              const std::string& out_path) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file()) files.push_back(entry.path());
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << "\n";
    return 2;
  }
  std::sort(files.begin(), files.end());

  std::vector<std::string> methods = split_csv(methods_csv);
  std::vector<std::string> orders = split_csv(orders_csv);
  std::vector<std::string> seeds = split_csv(seeds_csv);

  std::string csv =
      "name,n,m,method,result_size,bound,lower_bound,exact_size,ratio,wall_time_ms\n";
  for (const auto& path : files) {
    std::string name = path.stem().string();
    std::optional<sbg::Digraph> g;
    try {
      std::ifstream in(path);
      g = sbg::Digraph::from_edge_list(in);
      if (!sbg::is_2vsb(*g)) g.reset();
    } catch (const std::exception&) {
      g.reset();
    }
    std::optional<int> exact_size;
    if (g && with_exact) {
      sbg::ExactResult er =
          sbg::exact_m2vsbss(*g, {max_n, max_m, time_limit_ms});
      if (er.proven_optimal) exact_size = er.size;
    }
    for (const auto& method : methods)
      for (const auto& order : orders)
        for (const auto& seed_str : seeds) {
          if (!g) {
            csv += name + ",,," + method + ",error,,,,,\n";
            continue;
          }
          std::uint64_t seed = std::stoull(seed_str);
          sbg::DeletionOrder ord = parse_order(order, seed);
          auto t0 = std::chrono::steady_clock::now();
          int size, bound;
          if (method == "alg1") {
            sbg::ApproxResult r = sbg::approx_m2vsbss_alg1(*g, ord);
            size = static_cast<int>(r.arcs.size());
            bound = r.bound;
          } else if (method == "union") {
            sbg::UnionResult r = sbg::union_algorithm(*g, ord);
            size = static_cast<int>(r.union_arcs.size());
            bound = 7 * g->n();
          } else {
            std::cerr << "error: unknown method \"" << method << "\"\n";
            return 2;
          }
          auto t1 = std::chrono::steady_clock::now();
          long long ms =
              std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                  .count();
          int lb = 2 * g->n();
          int denom = exact_size.value_or(lb);
          double ratio = static_cast<double>(size) / denom;
          csv += name + "," + std::to_string(g->n()) + "," +
                 std::to_string(g->m()) + "," + method + "," +
                 std::to_string(size) + "," + std::to_string(bound) + "," +
                 std::to_string(lb) + "," +
                 (exact_size ? std::to_string(*exact_size) : "") + "," +
                 format_ratio(ratio) + "," + std::to_string(ms) + "\n";
        }
  }
  write_output(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-vertex strongly biconnected spanning subgraph toolkit"};
  app.require_subcommand(1);

  std::string file, property = "2vsb", method = "alg1", order = "lex";
  std::string out_path, highlight_file, kind, dir;
  std::string methods_csv = "alg1,union", orders_csv = "lex", seeds_csv = "0";
  std::uint64_t seed = 0;
  int n = 8, extra_arcs = 0, max_n = 10, max_m = 32;
  std::int64_t time_limit_ms = 60000;
  bool with_exact = false;

  auto* check = app.add_subcommand("check", "test a graph property");
  check->add_option("file", file)->required();
  check->add_option("--property", property,
                    "sc|bicon|sb|2vc|2vsb|3vc-underlying");

  auto* sbcc_cmd = app.add_subcommand("sbcc", "strongly biconnected components");
  sbcc_cmd->add_option("file", file)->required();

  auto* bap = app.add_subcommand("bap", "b-articulation points");
  bap->add_option("file", file)->required();

  auto* approx = app.add_subcommand("approx", "approximate minimum 2VSB subgraph");
  approx->add_option("file", file)->required();
  approx->add_option("--method", method, "alg1|union");
  approx->add_option("--order", order, "input|lex|random");
  approx->add_option("--seed", seed);
  approx->add_option("--out", out_path);

  auto* exact = app.add_subcommand("exact", "exact minimum 2VSB subgraph");
  exact->add_option("file", file)->required();
  exact->add_option("--max-n", max_n);
  exact->add_option("--max-m", max_m);
  exact->add_option("--time-limit-ms", time_limit_ms);
  exact->add_option("--out", out_path);

  auto* gen = app.add_subcommand("gen", "emit a fixture or random 2VSB graph");
  gen->add_option("kind", kind, "fig1a|fig1b|fig1c|tri|k4bi|random2vsb")
      ->required();
  gen->add_option("--n", n);
  gen->add_option("--extra-arcs", extra_arcs);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);

  auto* bench = app.add_subcommand("bench", "CSV benchmark over a directory");
  bench->add_option("dir", dir)->required();
  bench->add_option("--methods", methods_csv);
  bench->add_option("--orders", orders_csv);
  bench->add_option("--seeds", seeds_csv);
  bench->add_flag("--with-exact", with_exact);
  bench->add_option("--max-n", max_n);
  bench->add_option("--max-m", max_m);
  bench->add_option("--time-limit-ms", time_limit_ms);
  bench->add_option("--out", out_path);

  auto* dot = app.add_subcommand("dot", "DOT export");
  dot->add_option("file", file)->required();
  dot->add_option("--highlight", highlight_file);
  dot->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) return run_check(file, property);
  if (sbcc_cmd->parsed()) return run_sbcc(file);
  if (bap->parsed()) return run_bap(file);
  if (approx->parsed()) return run_approx(file, method, order, seed, out_path);
  if (exact->parsed()) return run_exact(file, max_n, max_m, time_limit_ms, out_path);
  if (gen->parsed()) return run_gen(kind, n, extra_arcs, seed, out_path);
  if (bench->parsed())
    return run_bench(dir, methods_csv, orders_csv, seeds_csv, with_exact, max_n,
                     max_m, time_limit_ms, out_path);
  if (dot->parsed()) return run_dot(file, highlight_file, out_path);
  return 2;
}
