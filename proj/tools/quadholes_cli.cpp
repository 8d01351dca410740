// Command-line front end: generation, solving, verification, the exact
// oracle, randomized stress runs, benchmarks and SVG rendering.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "quadholes/errors.hpp"
#include "quadholes/generate.hpp"
#include "quadholes/io.hpp"
#include "quadholes/oracle.hpp"
#include "quadholes/small_solvers.hpp"
#include "quadholes/solver.hpp"

namespace qh = quadholes;

namespace {

constexpr int kExitVerifyFailed = 2;
constexpr int kExitParse = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitContradiction = 5;

int thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QUADHOLE_THREADS")) {
    const int v = std::atoi(env);
    if (v < 1) throw qh::PreconditionError("QUADHOLE_THREADS must be a positive integer");
    n = static_cast<unsigned>(v);
  }
  return static_cast<int>(n);
}

// Runs body(i) for i in [0, count) on up to thread_count() workers.
template <typename Body>
void parallel_for(int count, Body&& body) {
  const int workers = std::min(thread_count(), std::max(count, 1));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

qh::PointSet load_points(const std::string& path) { return qh::parse_points(qh::read_file(path)); }

int cmd_gen(const std::string& kind, int n, std::uint64_t seed, std::int64_t bbox, const std::string& out) {
  const qh::PointSet s = qh::generate(qh::parse_gen_kind(kind), n, seed, bbox);
  qh::write_file(out, qh::serialize_points(s));
  return 0;
}

int cmd_solve(const std::string& in, const std::string& out, bool verify) {
  const qh::PointSet s = load_points(in);
  const qh::Solution sol = qh::solve(s);
  const std::string text = qh::serialize_solution(qh::make_solution_file(s, sol));
  if (verify) {
    // Check what will be written, after a round trip through the text form.
    const qh::SolutionFile back = qh::parse_solution(text);
    const qh::Verdict v = qh::verify_solution(s, back.quads);
    if (!v.ok() || static_cast<int>(back.quads.size()) < back.floor)
      throw qh::ContradictionError("solution failed verification: " + v.message);
  }
  qh::write_file(out, text);
  std::cout << fmt::format("n {} quads {} floor {}\n", s.size(), sol.quads.size(), sol.floor);
  return 0;
}

int cmd_verify(const std::string& in, const std::string& sol_path) {
  const qh::PointSet s = load_points(in);
  const qh::SolutionFile f = qh::parse_solution(qh::read_file(sol_path));
  const auto fail = [](const std::string& why) {
    std::cerr << "FAIL: " << why << "\n";
    return kExitVerifyFailed;
  };
  if (f.checksum != qh::checksum(s))
    return fail(fmt::format("checksum {:08x} does not match the point set ({:08x})", f.checksum, qh::checksum(s)));
  if (f.n != s.size()) return fail(fmt::format("solution is for n={}, point set has n={}", f.n, s.size()));
  if (f.floor != qh::lower_bound_formula(s.size()))
    return fail(fmt::format("floor {} differs from the guaranteed {}", f.floor, qh::lower_bound_formula(s.size())));
  const qh::Verdict v = qh::verify_solution(s, f.quads);
  if (!v.ok()) return fail(qh::to_string(v.kind) + ": " + v.message);
  if (static_cast<int>(f.quads.size()) < f.floor)
    return fail(fmt::format("{} quads, fewer than the floor {}", f.quads.size(), f.floor));
  std::cout << fmt::format("OK {} quads, floor {}\n", f.quads.size(), f.floor);
  return 0;
}

int cmd_oracle(const std::string& in, bool want_max) {
  const qh::PointSet s = load_points(in);
  const qh::OracleLimits limits;
  if (want_max && s.size() > limits.max_points)
    throw qh::CapExceededError(fmt::format("exact maximum is capped at n <= {}", limits.max_points));
  const qh::HoleCatalog cat = qh::enumerate_4holes(s);
  std::cout << "holes " << cat.size() << "\n";
  if (want_max) std::cout << "max " << qh::max_compatible(cat, limits).count << "\n";
  return 0;
}

int cmd_stress(int size, int iters, std::uint64_t seed) {
  if (size != 9 && size != 11) throw qh::PreconditionError("--size must be 9 or 11");
  if (iters < 0) throw qh::PreconditionError("--iters must be non-negative");
  std::vector<int> status(static_cast<std::size_t>(iters), 0);  // 0 ok, 1 fallback, 2 counterexample
  std::vector<std::string> detail(static_cast<std::size_t>(iters));
  const auto t0 = std::chrono::steady_clock::now();
  parallel_for(iters, [&](int i) {
    const qh::PointSet s = qh::generate(qh::GenKind::Random, size, seed + static_cast<std::uint64_t>(i));
    const qh::SmallSolution r = size == 9 ? qh::solve9(s) : qh::solve11(s);
    const qh::Verdict v = qh::verify_solution(s, r.quads);
    auto& st = status[static_cast<std::size_t>(i)];
    if (!v.ok() || static_cast<int>(r.quads.size()) < qh::small_floor(size) || !qh::respects_assertions(r)) {
      st = 2;
      detail[static_cast<std::size_t>(i)] = v.ok() ? r.method : v.message;
    } else if (r.fell_back) {
      st = 1;
      detail[static_cast<std::size_t>(i)] = r.method;
    }
  });
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int fallbacks = 0, bad = 0;
  for (int i = 0; i < iters; ++i) {
    const int st = status[static_cast<std::size_t>(i)];
    if (st == 0) continue;
    (st == 1 ? fallbacks : bad) += 1;
    std::cout << fmt::format("{} seed {}: {}\n", st == 1 ? "fallback" : "COUNTEREXAMPLE",
                             seed + static_cast<std::uint64_t>(i), detail[static_cast<std::size_t>(i)]);
  }
  std::cout << fmt::format("size {} iters {} counterexamples {} fallbacks {} seconds {:.2f}\n", size, iters, bad,
                           fallbacks, secs);
  return bad == 0 ? 0 : kExitContradiction;
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || v < 3) throw qh::PreconditionError("bad --n-list entry '" + item + "'");
    out.push_back(v);
    start = comma + 1;
  }
  return out;
}

int cmd_bench(const std::string& n_list, std::uint64_t seed) {
  std::cout << "n,seconds,count,floor\n";
  for (int n : parse_n_list(n_list)) {
    const qh::PointSet s = qh::generate(qh::GenKind::Random, n, seed);
    const auto t0 = std::chrono::steady_clock::now();
    const qh::Solution sol = qh::solve(s);
    const qh::Verdict v = qh::verify_solution(s, sol.quads);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.ok()) throw qh::ContradictionError("benchmark solution failed verification: " + v.message);
    std::cout << fmt::format("{},{:.6f},{},{}\n", n, secs, sol.quads.size(), sol.floor);
  }
  return 0;
}

int cmd_render(const std::string& in, const std::string& sol_path, const std::string& out) {
  const qh::PointSet s = load_points(in);
  const qh::SolutionFile f = qh::parse_solution(qh::read_file(sol_path));
  if (f.checksum != qh::checksum(s)) throw qh::PreconditionError("solution does not belong to this point set");
  qh::write_file(out, qh::render_svg(s, f.quads));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compatible 4-holes in planar point sets"};
  app.require_subcommand(1);

  std::string kind, in, out, sol_path, n_list;
  int n = 0, size = 0, iters = 0;
  std::uint64_t seed = 0;
  std::int64_t bbox = qh::kDefaultBBox;
  bool verify = true, want_max = false;

  CLI::App* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("--kind", kind, "random, convex or clustered")->required();
  gen->add_option("--n", n, "Number of points")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--bbox", bbox, "Coordinates lie in [0, bbox)");
  gen->add_option("-o", out, "Output point-set file")->required();

  CLI::App* solve = app.add_subcommand("solve", "Construct compatible 4-holes");
  solve->add_option("-i", in, "Point-set file")->required();
  solve->add_option("-o", out, "Output solution file")->required();
  solve->add_flag("--verify,!--no-verify", verify, "Verify before writing (default on)");

  CLI::App* ver = app.add_subcommand("verify", "Check a solution against its point set");
  ver->add_option("-i", in, "Point-set file")->required();
  ver->add_option("-s", sol_path, "Solution file")->required();

  CLI::App* orc = app.add_subcommand("oracle", "Count 4-holes; exact maximum with --max");
  orc->add_option("-i", in, "Point-set file")->required();
  orc->add_flag("--max", want_max, "Exact maximum compatible set (small n only)");

  CLI::App* stress = app.add_subcommand("stress", "Randomized check of the 9- and 11-point solvers");
  stress->add_option("--size", size, "9 or 11")->required();
  stress->add_option("--iters", iters, "Number of random sets")->required();
  stress->add_option("--seed", seed, "First seed")->required();

  CLI::App* bench = app.add_subcommand("bench", "Time solve+verify; CSV on stdout");
  bench->add_option("--n-list", n_list, "Comma-separated sizes")->required();
  bench->add_option("--seed", seed, "Random seed")->required();

  CLI::App* render = app.add_subcommand("render", "Draw a solution as SVG");
  render->add_option("-i", in, "Point-set file")->required();
  render->add_option("-s", sol_path, "Solution file")->required();
  render->add_option("-o", out, "Output SVG file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*gen) return cmd_gen(kind, n, seed, bbox, out);
    if (*solve) return cmd_solve(in, out, verify);
    if (*ver) return cmd_verify(in, sol_path);
    if (*orc) return cmd_oracle(in, want_max);
    if (*stress) return cmd_stress(size, iters, seed);
    if (*bench) return cmd_bench(n_list, seed);
    if (*render) return cmd_render(in, sol_path, out);
  } catch (const qh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qh::ContradictionError& e) {
    std::cerr << "internal contradiction: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const qh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPrecondition;
}
