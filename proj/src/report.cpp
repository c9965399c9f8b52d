#include "eccwheel/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <thread>

#include "eccwheel/circulant.hpp"
#include "eccwheel/closedform.hpp"
#include "eccwheel/errors.hpp"
#include "eccwheel/graphs.hpp"
#include "eccwheel/oracle.hpp"

namespace eccwheel::report {

namespace {

namespace cf = closedform;
using circulant::CirculantQ;

struct Outcome {
  bool ok;
  std::string expected;
  std::string actual;
  std::string note{};
};

Outcome same(const Rational& expected, const Rational& actual) {
  return {expected == actual, expected.to_string(), actual.to_string()};
}

Outcome same(const InertiaTriple& expected, const InertiaTriple& actual) {
  return {expected == actual, expected.to_string(), actual.to_string()};
}

Outcome same(long expected, long actual) {
  return {expected == actual, std::to_string(expected), std::to_string(actual)};
}

Outcome holds(bool ok, std::string what = "equal") {
  return {ok, what, ok ? what : "differs"};
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

// Objects shared by several checks for one n, built on first use.
class Context {
 public:
  explicit Context(int n) : n_(n) {}

  int n() const { return n_; }
  std::size_t order() const { return static_cast<std::size_t>(n_); }
  int residue() const { return n_ % 3; }

  const MatrixQ& e_closed() { return get(e_closed_, [&] { return cf::ecc_matrix_wheel(n_); }); }
  const MatrixQ& e_definitional() {
    return get(e_def_, [&] {
      return graphs::eccentricity_matrix_definitional(
          graphs::bfs_distances(graphs::build_wheel(n_)));
    });
  }
  const MatrixQ& e_minus_edge_definitional() {
    return get(em_def_, [&] {
      return graphs::eccentricity_matrix_definitional(
          graphs::bfs_distances(graphs::delete_cycle_edge(graphs::build_wheel(n_))));
    });
  }

 private:
  template <class F>
  const MatrixQ& get(std::optional<MatrixQ>& slot, F&& make) {
    if (!slot) slot.emplace(make());
    return *slot;
  }

  int n_;
  std::optional<MatrixQ> e_closed_;
  std::optional<MatrixQ> e_def_;
  std::optional<MatrixQ> em_def_;
};

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void run(const std::string& name, const std::function<Outcome()>& fn) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = fn();
      r.status = o.ok ? Status::pass : Status::fail;
      r.expected = std::move(o.expected);
      r.actual = std::move(o.actual);
      r.note = std::move(o.note);
    } catch (const std::exception& ex) {
      r.status = Status::fail;
      r.actual = "error";
      r.note = ex.what();
    }
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    report_.checks.push_back(std::move(r));
  }

  void skip(const std::string& name, std::string note) {
    CheckResult r;
    r.name = name;
    r.status = Status::skip;
    r.note = std::move(note);
    report_.checks.push_back(std::move(r));
  }

  void run_if(bool applicable, const std::string& name, const std::string& skip_note,
              const std::function<Outcome()>& fn) {
    if (applicable) {
      run(name, fn);
    } else {
      skip(name, skip_note);
    }
  }

 private:
  VerificationReport& report_;
};

const char* const kInvertibleOnly = "applies only when n is not 1 mod 3";
const char* const kSingularOnly = "applies only when n = 1 mod 3";

void verify_small(VerificationReport& rep) {
  for (const auto& name : check_names()) {
    rep.checks.push_back({name, Status::skip, "", "", "closed forms are stated for n >= 5", 0.0});
  }
  const MatrixQ e = graphs::eccentricity_matrix_definitional(
      graphs::bfs_distances(graphs::build_wheel(rep.n)));
  rep.oracle_values = {
      {"det", oracle::bareiss_det(e).to_string()},
      {"inertia", oracle::inertia_exact(e).inertia.to_string()},
      {"rank", std::to_string(oracle::rank_exact(e))},
      {"irreducible", oracle::is_irreducible(e) ? "true" : "false"},
      {"spectral_radius", fixed(oracle::power_iteration_rho(e))},
      {"inverse_times_E_is_identity",
       mat_mul(oracle::inverse_exact(e), e) == identity(e.rows()) ? "true" : "false"},
  };
}

void verify_wheel(VerificationReport& rep, const VerifyOptions& options) {
  Context ctx(rep.n);
  Runner run(rep);
  const int n = ctx.n();
  const bool invertible = ctx.residue() != 1;
  const bool singular = !invertible && n >= 7;

  run.run("ecc_matrix_definitional", [&] { return holds(ctx.e_closed() == ctx.e_definitional()); });
  run.run("ecc_minus_edge_definitional", [&] {
    return holds(cf::ecc_matrix_wheel_minus_edge(n) == ctx.e_minus_edge_definitional());
  });
  run.run("det_ecc_matrix", [&] { return same(cf::det_E_closed(n), oracle::bareiss_det(ctx.e_definitional())); });
  run.run("det_tridiagonal", [&] {
    const auto m = ctx.order() - 1;
    const Rational closed = cf::det_T_closed(m);
    const auto general = cf::det_tridiagonal_closed(m, -2, -2, -2);
    Outcome o = same(closed, oracle::bareiss_det(circulant::tridiagonal({m, -2, -2, -2})));
    if (!(general.value == closed)) {
      o.ok = false;
      o.note = "general tridiagonal formula gives " + general.value.to_string();
    }
    return o;
  });
  run.run("det_bordered", [&] { return same(cf::det_B_closed(n), oracle::bareiss_det(cf::bordered_B(n))); });
  run.run("det_recurrence_bordered", [&] {
    const Rational rhs = Rational(4) * cf::det_T_closed(ctx.order() - 4) + Rational(8) * cf::det_B_closed(n - 3);
    return same(cf::det_B_closed(n), rhs);
  });
  run.run("det_recurrence_ecc", [&] {
    const Rational rhs = -Rational((n - 1) * (n - 1)) * cf::det_T_closed(ctx.order() - 2) +
                         Rational(6 * (n - 1)) * cf::det_B_closed(n - 1);
    return same(cf::det_E_closed(n), rhs);
  });
  run.run("det_minus_edge", [&] {
    return same(cf::det_E_minus_edge_closed(n), oracle::bareiss_det(ctx.e_minus_edge_definitional()));
  });
  run.run("invertibility", [&] {
    bool oracle_invertible = true;
    try {
      oracle::inverse_exact(ctx.e_definitional());
    } catch (const SingularMatrixError&) {
      oracle_invertible = false;
    }
    const auto label = [](bool inv) { return std::string(inv ? "invertible" : "singular"); };
    return Outcome{invertible == oracle_invertible, label(invertible), label(oracle_invertible)};
  });
  run.run("inertia_minus_edge", [&] {
    return same(cf::inertia_E_minus_edge_closed(n), oracle::inertia_exact(ctx.e_minus_edge_definitional()).inertia);
  });
  run.run("inertia_ecc_matrix", [&] {
    return same(cf::inertia_E_closed(n), oracle::inertia_exact(ctx.e_definitional()).inertia);
  });
  run.run("rank_ecc_matrix", [&] {
    return same(cf::rank_E_closed(n), static_cast<long>(oracle::rank_exact(ctx.e_definitional())));
  });
  run.run_if(n >= 6, "interlacing_inertia", "needs the n-1 vertex wheel minus an edge, so n >= 6", [&] {
    const MatrixQ sub = cf::ecc_matrix_wheel_minus_edge(n - 1);
    const bool principal = ctx.e_closed().block(0, 0, sub.rows(), sub.cols()) == sub;
    const InertiaTriple small = cf::inertia_E_minus_edge_closed(n - 1);
    const InertiaTriple big = cf::inertia_E_closed(n);
    const bool ok = principal && big.n_plus >= small.n_plus && big.n_minus >= small.n_minus;
    return Outcome{ok, big.to_string() + " dominates " + small.to_string(),
                   principal ? big.to_string() + " vs " + small.to_string() : "not a principal submatrix"};
  });
  run.run_if(singular, "null_vectors", kSingularOnly, [&] {
    const auto [x, y] = cf::null_vectors(n);
    const VectorQ w = cf::weight_w(n);
    const MatrixQ pair = MatrixQ::generate(ctx.order(), 2, [&](std::size_t i, std::size_t j) {
      return j == 0 ? x[i] : y[i];
    });
    const bool ok = mat_vec(ctx.e_definitional(), x).is_zero() &&
                    mat_vec(ctx.e_definitional(), y).is_zero() && oracle::rank_exact(pair) == 2 &&
                    dot(w, x).is_zero() && dot(w, y).is_zero();
    return holds(ok, "annihilated and independent");
  });
  run.run("weight_identity", [&] {
    return holds(mat_vec(ctx.e_definitional(), cf::weight_w(n)) ==
                 Rational(n - 1, 6) * VectorQ::ones(ctx.order()));
  });

  run.run_if(invertible, "laplacian_tilde_identity", kInvertibleOnly, [&] {
    const VectorQ w = cf::weight_w(n);
    const MatrixQ lhs = mat_mul(cf::laplacian_tilde(n), ctx.e_definitional()) + Rational(2) * identity(ctx.order());
    return holds(lhs == Rational(2) * outer(w, VectorQ::ones(ctx.order())));
  });
  run.run_if(invertible, "laplacian_tilde_like", kInvertibleOnly, [&] {
    const MatrixQ l = cf::laplacian_tilde(n);
    return holds(l.is_symmetric() && mat_vec(l, VectorQ::ones(ctx.order())).is_zero(),
                 "symmetric with zero row sums");
  });
  run.run_if(invertible, "laplacian_tilde_rank", kInvertibleOnly, [&] {
    return same(n - 1, static_cast<long>(oracle::rank_exact(cf::laplacian_tilde(n))));
  });
  run.run_if(invertible, "circulant_M_rowsum", kInvertibleOnly, [&] {
    const MatrixQ m = circulant::to_dense(cf::circulant_M(n));
    return holds(mat_vec(m, VectorQ::ones(ctx.order() - 1)) == Rational(2 - n, 3) * VectorQ::ones(ctx.order() - 1));
  });
  run.run_if(invertible, "circulant_M_product", kInvertibleOnly, [&] {
    const MatrixQ rim = ctx.e_definitional().block(1, 1, ctx.order() - 1, ctx.order() - 1);
    return holds(mat_mul(circulant::to_dense(cf::circulant_M(n)), rim) ==
                 circulant::to_dense(cf::m_times_rim_target(n)));
  });
  run.run_if(invertible, "inverse_formula", kInvertibleOnly, [&] {
    const MatrixQ x = cf::inverse_E_closed(n);
    const bool ok = mat_mul(ctx.e_definitional(), x) == identity(ctx.order()) &&
                    x == oracle::inverse_exact(ctx.e_definitional());
    return holds(ok, "E X = I and X matches Gauss-Jordan");
  });

  run.run_if(singular, "laplacian_hat_like", kSingularOnly, [&] {
    const MatrixQ l = cf::laplacian_hat(n);
    return holds(l.is_symmetric() && mat_vec(l, VectorQ::ones(ctx.order())).is_zero(),
                 "symmetric with zero row sums");
  });
  run.run_if(singular, "laplacian_hat_rank", kSingularOnly, [&] {
    return same(n - 3, static_cast<long>(oracle::rank_exact(cf::laplacian_hat(n))));
  });
  run.run_if(singular, "circulant_P_rowsum", kSingularOnly, [&] {
    const MatrixQ p = circulant::to_dense(cf::circulant_P(n));
    return holds(mat_vec(p, VectorQ::ones(ctx.order() - 1)) == Rational(2 - n, 3) * VectorQ::ones(ctx.order() - 1));
  });
  run.run_if(singular, "circulant_PV", kSingularOnly, [&] {
    const MatrixQ v = circulant::to_dense(CirculantQ(circulant::period3_v(ctx.order() - 1)));
    return holds(mat_mul(circulant::to_dense(cf::circulant_P(n)), v) == Rational(1 - n, 3) * v);
  });
  run.run_if(singular, "circulant_PU", kSingularOnly, [&] {
    const MatrixQ u = circulant::to_dense(CirculantQ(circulant::neighbor_row(ctx.order() - 1)));
    return holds(mat_mul(circulant::to_dense(cf::circulant_P(n)), u) ==
                 circulant::to_dense(cf::p_times_u_target(n)));
  });
  run.run_if(singular, "laplacian_hat_product", kSingularOnly, [&] {
    return holds(mat_mul(cf::laplacian_hat(n), ctx.e_definitional()) == cf::laplacian_hat_times_E_target(n));
  });
  run.run_if(singular, "pinv_formula", kSingularOnly, [&] {
    const auto r = oracle::penrose_check(ctx.e_definitional(), cf::pinv_E_closed(n));
    const auto flag = [](bool b) { return b ? "1" : "0"; };
    return Outcome{r.all(), "1111",
                   std::string(flag(r.axa)) + flag(r.xax) + flag(r.ax_symmetric) + flag(r.xa_symmetric),
                   "Penrose conditions AXA, XAX, (AX)', (XA)'"};
  });
  run.run_if(singular, "pinv_residual", kSingularOnly, [&] {
    return holds(mat_mul(cf::pinv_E_closed(n), ctx.e_definitional()) == cf::pinv_times_E_target(n));
  });
  run.run_if(singular && n >= 10, "rank_certificate", "applies only when n = 1 mod 3 and n >= 10", [&] {
    const auto cert = oracle::rank_certificate_check(n);
    return Outcome{cert.holds(ctx.order()), std::to_string(n - 3),
                   cert.product_matches ? std::to_string(cert.rank_c) : "product differs",
                   "rank of C with L_hat E X = C"};
  });

  run.run("irreducible", [&] {
    const bool irr = oracle::is_irreducible(ctx.e_definitional());
    return Outcome{irr, "true", irr ? "true" : "false"};
  });
  const auto rho = cf::spectral_radius_closed(n);
  run.run("spectral_radius", [&] {
    const double numeric = oracle::power_iteration_rho(ctx.e_definitional());
    return Outcome{std::abs(numeric - rho.rho_float) < options.tol, fixed(rho.rho_float), fixed(numeric),
                   std::to_string(rho.integer_part) + " + sqrt(" + std::to_string(rho.radicand) + ")"};
  });
  run.run("perron_vector", [&] {
    const std::vector<double> v = rho.perron_vector();
    double residual = 0.0;
    const MatrixQ& e = ctx.e_definitional();
    for (std::size_t i = 0; i < ctx.order(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < ctx.order(); ++j) s += e(i, j).to_double() * v[j];
      residual = std::max(residual, std::abs(s - rho.rho_float * v[i]));
    }
    return Outcome{residual < options.tol, "< " + scientific(options.tol), scientific(residual),
                   "max-norm residual of E v - rho v"};
  });
  run.run("quotient_matrix", [&] {
    const MatrixQ q = cf::quotient_matrix(n);
    const MatrixQ& e = ctx.e_definitional();
    const std::size_t m = ctx.order() - 1;
    bool ok = e.block(0, 0, 1, 1).entries()[0] == q(0, 0) &&
              e.block(0, 1, 1, m).row_vector(0).sum() == q(0, 1);
    for (std::size_t i = 1; i <= m; ++i) {
      ok = ok && e(i, 0) == q(1, 0) && e.block(i, 1, 1, m).row_vector(0).sum() == q(1, 1);
    }
    // x^2 - tr(Q) x + det(Q) has roots (n-4) +- sqrt(n^2-7n+15).
    const Rational trace = q(0, 0) + q(1, 1);
    const Rational det = q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
    ok = ok && trace == Rational(2 * rho.integer_part) &&
         det == Rational(rho.integer_part * rho.integer_part - rho.radicand);
    return holds(ok, "equitable row sums and matching eigenvalues");
  });
  run.run("edm_witness", [&] {
    const VectorQ z = cf::edm_witness(n);
    const Rational value = dot(z, mat_vec(ctx.e_definitional(), z));
    Outcome o = same(cf::edm_witness_value(n), value);
    if (!z.sum().is_zero()) {
      o.ok = false;
      o.note = "witness is not orthogonal to e";
    }
    return o;
  });
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "ecc_matrix_definitional", "ecc_minus_edge_definitional", "det_ecc_matrix",
      "det_tridiagonal", "det_bordered", "det_recurrence_bordered", "det_recurrence_ecc",
      "det_minus_edge", "invertibility", "inertia_minus_edge", "inertia_ecc_matrix",
      "rank_ecc_matrix", "interlacing_inertia", "null_vectors", "weight_identity",
      "laplacian_tilde_identity", "laplacian_tilde_like", "laplacian_tilde_rank",
      "circulant_M_rowsum", "circulant_M_product", "inverse_formula", "laplacian_hat_like",
      "laplacian_hat_rank", "circulant_P_rowsum", "circulant_PV", "circulant_PU",
      "laplacian_hat_product", "pinv_formula", "pinv_residual", "rank_certificate",
      "irreducible", "spectral_radius", "perron_vector", "quotient_matrix", "edm_witness",
  };
  return names;
}

VerificationReport verify(int n, const VerifyOptions& options) {
  if (n < 4) throw DomainError("verify: requires n >= 4, got n = " + std::to_string(n));
  VerificationReport rep;
  rep.n = n;
  if (n == 4) {
    verify_small(rep);
  } else {
    verify_wheel(rep, options);
  }
  return rep;
}

SweepResult sweep(int n_min, int n_max, unsigned jobs, const VerifyOptions& options) {
  if (n_min < 4 || n_min > n_max) {
    throw DomainError("sweep: requires 4 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                      std::to_string(n_max));
  }
  const auto count = static_cast<std::size_t>(n_max - n_min + 1);
  SweepResult result;
  result.reports.resize(count);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      result.reports[i] = verify(n_min + static_cast<int>(i), options);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  auto& s = result.summary;
  s.n_min = n_min;
  s.n_max = n_max;
  s.reports = count;
  for (const auto& rep : result.reports) {
    for (const auto& c : rep.checks) {
      s.max_wall_ms = std::max(s.max_wall_ms, c.wall_ms);
      switch (c.status) {
        case Status::pass: ++s.passed; break;
        case Status::skip: ++s.skipped; break;
        case Status::fail:
          ++s.failed;
          if (!s.has_failure) {
            s.has_failure = true;
            s.first_failure_n = rep.n;
            s.first_failure_check = c.name;
          }
          break;
      }
    }
  }
  return result;
}

}  // namespace eccwheel::report
