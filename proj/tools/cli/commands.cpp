#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cli/cache.hpp"
#include "weylchar/crystal.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/factorization.hpp"
#include "weylchar/multiplicity.hpp"
#include "weylchar/serialize.hpp"
#include "weylchar/symfunc.hpp"

namespace weylchar::cli {

namespace {

struct Options {
  std::string lambda, mu, inner, m, method = "chain", format, out_path, cache_dir;
  std::string b_file = "auto", dbar_file, x_file, d_file;
  int n = -1;
  int r = -1;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

MultiPartition shape_arg(const std::string& text, const char* flag) {
  if (text.empty()) throw InputError(std::string(flag) + " is required");
  return parse_multipartition(text);
}

int resolve_r(const Options& o, int from_shape) {
  if (o.r >= 0 && o.r != from_shape)
    throw InputError("--r " + std::to_string(o.r) + " disagrees with a shape of " + std::to_string(from_shape) +
                     " components");
  return from_shape;
}

ShapeBound resolve_bound(const Options& o, int r, int n) {
  if (o.m.empty()) return ShapeBound::uniform(r, n);
  ShapeBound b = parse_bound(o.m);
  if (b.r() != r) throw InputError("--m lists " + std::to_string(b.r()) + " bounds for r = " + std::to_string(r));
  return b;
}

std::string bound_key(const ShapeBound& b) { return Json(b.values()).dump(); }

unsigned jobs_of(const Options& o) {
  if (o.jobs != 0) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// A command computes its output bytes; the key names them for the cache.
struct Result {
  std::string payload;
  int status = ok;
};

class Runner {
 public:
  Runner(const Options& o, std::optional<DiskCache> cache) : o_(o), cache_(std::move(cache)) {}

  Result cached(const std::string& op, const std::string& key, const std::function<Result()>& compute) {
    if (cache_) {
      if (auto hit = cache_->load(op, key)) return Result{*hit, ok};
    }
    Result res = compute();
    if (cache_ && res.status == ok) cache_->store(op, key, res.payload);
    return res;
  }

  Result beta_cmd() {
    const auto la = shape_arg(o_.lambda, "--lambda");
    const auto mu = shape_arg(o_.mu, "--mu");
    const int r = resolve_r(o_, la.r());
    if (mu.r() != r) throw InputError("--lambda and --mu have different component counts");
    const auto bound = resolve_bound(o_, r, std::max(la.size(), mu.size()));
    const std::string key = "lambda=" + to_json(la).dump() + " mu=" + to_json(mu).dump() + " m=" + bound_key(bound) +
                            " method=" + o_.method;
    return cached("beta", key, [&] {
      if (o_.method == "all") {
        Count s = beta_singular(la, mu, bound), c = beta_chain(la, mu, bound), v = beta_solve(la, mu, bound);
        bool agree = s == c && c == v;
        std::string json = "{\"singular\":" + to_decimal(s) + ",\"chain\":" + to_decimal(c) + ",\"solve\":" +
                           to_decimal(v) + ",\"agree\":" + (agree ? "true" : "false") + "}\n";
        return Result{json, agree ? ok : consistency_error};
      }
      return Result{to_decimal(beta(la, mu, bound, parse_beta_method(o_.method))) + "\n", ok};
    });
  }

  Result beta_matrix_cmd() {
    if (o_.n < 0) throw InputError("--n is required and must be nonnegative");
    if (o_.r < 1) throw InputError("--r is required and must be positive");
    const auto bound = resolve_bound(o_, o_.r, o_.n);
    const auto method = parse_beta_method(o_.method);
    const std::string format = o_.format.empty() ? "json" : o_.format;
    if (format != "json" && format != "tsv") throw InputError("beta-matrix --format must be json or tsv");
    const std::string key = "n=" + std::to_string(o_.n) + " m=" + bound_key(bound) + " method=" + o_.method +
                            " format=" + format;
    return cached("beta-matrix", key, [&] {
      auto b = build_beta_matrix(o_.n, bound, method, jobs_of(o_));
      return Result{format == "json" ? write_matrix_json(b) + "\n" : write_matrix_tsv(to_indexed(b)), ok};
    });
  }

  Result character_cmd() {
    const auto la = shape_arg(o_.lambda, "--lambda");
    const auto bound = resolve_bound(o_, resolve_r(o_, la.r()), la.size());
    const std::string key = "lambda=" + to_json(la).dump() + " m=" + bound_key(bound);
    return cached("character", key, [&] { return Result{write_expansion(character(la, bound)) + "\n", ok}; });
  }

  Result tilde_cmd() {
    const auto la = shape_arg(o_.lambda, "--lambda");
    resolve_r(o_, la.r());
    return cached("tilde", "lambda=" + to_json(la).dump(),
                  [&] { return Result{write_expansion(tilde_schur(la)) + "\n", ok}; });
  }

  Result cmul_cmd() {
    const auto la = shape_arg(o_.lambda, "--lambda");
    const auto mu = shape_arg(o_.mu, "--mu");
    resolve_r(o_, la.r());
    if (mu.r() != la.r()) throw InputError("--lambda and --mu have different component counts");
    return cached("cmul", "lambda=" + to_json(la).dump() + " mu=" + to_json(mu).dump(),
                  [&] { return Result{write_expansion(c_coeffs(la, mu)) + "\n", ok}; });
  }

  Result conjecture_cmd() {
    if (o_.n < 0) throw InputError("--n-max is required and must be nonnegative");
    if (o_.r < 1) throw InputError("--r is required and must be positive");
    return cached("conjecture-scan", "n_max=" + std::to_string(o_.n) + " r=" + std::to_string(o_.r), [&] {
      return Result{write_conjecture_report(conjecture_scan(o_.n, o_.r, jobs_of(o_))) + "\n", ok};
    });
  }

  Result crystal_cmd() {
    const auto la = shape_arg(o_.lambda, "--lambda");
    const int r = resolve_r(o_, la.r());
    const auto inner = o_.inner.empty() ? MultiPartition::empty(r) : parse_multipartition(o_.inner);
    SkewShape shape(la, inner);
    const auto bound = resolve_bound(o_, r, shape.size());
    const std::string format = o_.format.empty() ? "dot" : o_.format;
    if (format != "dot" && format != "json") throw InputError("crystal-graph --format must be dot or json");
    const std::string key = "lambda=" + to_json(la).dump() + " inner=" + to_json(inner).dump() +
                            " m=" + bound_key(bound) + " format=" + format;
    return cached("crystal-graph", key, [&] {
      auto g = crystal_graph(shape, bound);
      return Result{format == "dot" ? write_crystal_dot(g) : write_crystal_summary(g) + "\n", ok};
    });
  }

  Result factorize_cmd() {
    if (o_.dbar_file.empty()) throw InputError("--Dbar is required");
    const auto dbar = parse_matrix(read_file(o_.dbar_file));
    IndexedMatrix b = o_.b_file == "auto" ? to_indexed(build_beta_matrix(dbar.n, dbar.bound, BetaMethod::chain, jobs_of(o_)))
                                          : parse_matrix(read_file(o_.b_file));
    const auto x = o_.x_file.empty() ? identity_indexed(dbar.n, dbar.bound) : parse_matrix(read_file(o_.x_file));
    if (!o_.d_file.empty()) {
      const auto d = parse_matrix(read_file(o_.d_file));
      return Result{write_factorization_report(factorization_harness(b, dbar, x, d), b) + "\n", ok};
    }
    require_same_index(b, x, "factorize");
    if (!(x.values == Matrix<BigInt>::identity(x.dimension())))
      throw InputError("factorize: D can only be derived when X is the identity; pass --D to check a residual");
    return Result{write_matrix_json(derive_decomposition(b, dbar)) + "\n", ok};
  }

 private:
  const Options& o_;
  std::optional<DiskCache> cache_;
};

void emit(const Options& o, const std::string& payload, std::ostream& out) {
  if (o.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + o.out_path);
  file << payload;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Weyl module multiplicities, characters and crystals", "weylchar"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "weylchar 0.1.0");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--r", o.r, "number of components");
    sub->add_option("--m", o.m, "row bounds, comma separated (default m_k = n)");
    sub->add_option("--out", o.out_path, "write the result to this file");
    sub->add_option("--cache-dir", o.cache_dir, "disk cache directory (WEYLCHAR_CACHE overrides)");
    sub->add_option("--jobs", o.jobs, "worker threads; 0 uses every core");
  };

  auto* beta = app.add_subcommand("beta", "multiplicity beta(lambda, mu)");
  beta->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
  beta->add_option("--mu", o.mu, "multipartition as JSON")->required();
  beta->add_option("--method", o.method, "singular, chain, solve or all")
      ->check(CLI::IsMember({"singular", "chain", "solve", "all"}));
  common(beta);

  auto* matrix = app.add_subcommand("beta-matrix", "the matrix B for size n");
  matrix->add_option("--n", o.n, "size")->required();
  matrix->add_option("--method", o.method, "singular, chain or solve")
      ->check(CLI::IsMember({"singular", "chain", "solve"}));
  matrix->add_option("--format", o.format, "json or tsv");
  common(matrix);

  auto* chr = app.add_subcommand("character", "monomial expansion of the Weyl character");
  chr->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
  common(chr);

  auto* tilde = app.add_subcommand("tilde", "Schur expansion of S~_lambda");
  tilde->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
  common(tilde);

  auto* cmul = app.add_subcommand("cmul", "structure constants c^nu_{lambda,mu}");
  cmul->add_option("--lambda", o.lambda, "multipartition as JSON")->required();
  cmul->add_option("--mu", o.mu, "multipartition as JSON")->required();
  common(cmul);

  auto* scan = app.add_subcommand("conjecture-scan", "report sign and support violations of c^nu");
  scan->add_option("--n-max,--n", o.n, "largest |lambda| + |mu|")->required();
  common(scan);

  auto* crystal = app.add_subcommand("crystal-graph", "crystal graph on the tableaux of a shape");
  crystal->add_option("--lambda", o.lambda, "outer multipartition as JSON")->required();
  crystal->add_option("--inner", o.inner, "inner multipartition as JSON");
  crystal->add_option("--format", o.format, "dot or json");
  common(crystal);

  auto* factor = app.add_subcommand("factorize", "check B * Dbar = D * X or derive D");
  factor->add_option("--B", o.b_file, "matrix file, or auto to compute B");
  factor->add_option("--Dbar", o.dbar_file, "matrix file")->required();
  factor->add_option("--X", o.x_file, "matrix file (default identity)");
  factor->add_option("--D", o.d_file, "matrix file; reports the residual instead of deriving D");
  common(factor);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    std::optional<DiskCache> cache;
    if (const char* env = std::getenv("WEYLCHAR_CACHE"); env && *env)
      cache.emplace(env);
    else if (!o.cache_dir.empty())
      cache.emplace(o.cache_dir);
    Runner runner(o, std::move(cache));

    Result res;
    if (*beta) res = runner.beta_cmd();
    else if (*matrix) res = runner.beta_matrix_cmd();
    else if (*chr) res = runner.character_cmd();
    else if (*tilde) res = runner.tilde_cmd();
    else if (*cmul) res = runner.cmul_cmd();
    else if (*scan) res = runner.conjecture_cmd();
    else if (*crystal) res = runner.crystal_cmd();
    else res = runner.factorize_cmd();

    emit(o, res.payload, out);
    if (res.status == consistency_error) err << "error: the beta algorithms disagree\n";
    return res.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return consistency_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return consistency_error;
  }
}

}  // namespace weylchar::cli
