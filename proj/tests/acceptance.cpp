// Acceptance gate: prints one [PASS]/[FAIL] line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "invred/error.hpp"
#include "invred/gfp.hpp"
#include "invred/group.hpp"
#include "invred/invariants.hpp"
#include "invred/reduction.hpp"
#include "invred/sampling.hpp"
#include "oracle/naive.hpp"

namespace {

using namespace invred;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<long long> to_longs(const Vector& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(x.residue());
  return out;
}

bool is_one_or_p_power(std::uint64_t e, std::uint32_t p) {
  if (e == 0) return false;
  while (e % p == 0) e /= p;
  return e == 1;
}

bool invariant_under_all(const Polynomial& f, const GroupElements& group) {
  for (const auto& g : group.elements) {
    if (!(act(g, f) == f)) return false;
  }
  return true;
}

std::vector<Vector> nonzero_span(const std::vector<Vector>& basis, Prime p) {
  std::vector<Vector> out;
  const std::size_t n = basis.front().size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= p.value();
  for (std::size_t code = 1; code < total; ++code) {
    Vector v(n, FieldElement(0, p));
    std::size_t c = code;
    for (const auto& b : basis) {
      const FieldElement a(static_cast<std::int64_t>(c % p.value()), p);
      c /= p.value();
      for (std::size_t i = 0; i < n; ++i) v[i] += a * b[i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

void ac1(Verdict& v) {
  const Prime p(2);
  for (std::int64_t lambda : {0, 1}) {
    const auto start = Clock::now();
    const GroupSpec spec = example_action(p, 2, FieldElement(lambda, p));
    const Vector em = example_point(p, 2);
    const EpsilonResult r = epsilon(spec, em);
    const double t = seconds_since(start);
    const std::string tag = "lambda=" + std::to_string(lambda);
    v.require(r.finite() && *r.value == 4, tag + " epsilon == 4");
    if (!r.finite()) continue;
    const Polynomial& w = *r.witness;
    v.require(w.is_homogeneous() && w.total_degree() == 4, tag + " witness degree 4");
    v.require(is_invariant(w, spec) && invariant_under_all(w, enumerate_group(spec)), tag + " witness invariant");
    v.require(!evaluate(w, em).is_zero(), tag + " witness nonzero at e_2");
    v.require(t < 1.0, tag + " runtime < 1 s");
    v.detail << tag << ": eps=" << *r.value << " in " << t << " s; ";
  }
}

void ac2(Verdict& v) {
  const Prime p(3);
  for (std::int64_t lambda : {0, 1, 2}) {
    const auto start = Clock::now();
    const GroupSpec spec = example_action(p, 2, FieldElement(lambda, p));
    const Vector em = example_point(p, 2);
    InvariantSlices slices(spec);
    const std::string tag = "lambda=" + std::to_string(lambda);
    std::size_t largest = 0;
    for (std::uint64_t d = 1; d <= 8; ++d) {
      const DegreeSliceBasis& b = slices.basis(d);
      largest = std::max(largest, slice_dimension(4, d));
      bool separates = false;
      for (const auto& f : b.basis) separates = separates || !evaluate(f, em).is_zero();
      v.require(!separates, tag + " no separating invariant in degree " + std::to_string(d));
    }
    v.require(largest <= 165, tag + " slice dimensions <= 165 through degree 8");
    const EpsilonResult r = epsilon(slices, em, 9);
    const double t = seconds_since(start);
    v.require(r.finite() && *r.value == 9, tag + " epsilon == 9");
    if (r.finite()) {
      v.require(is_invariant(*r.witness, spec) && !evaluate(*r.witness, em).is_zero(), tag + " witness verified");
    }
    v.require(t < 60.0, tag + " runtime < 60 s");
    const int oracle_eps = oracle::epsilon(oracle::example_generators(2, lambda), to_longs(em), 9, 3);
    v.require(oracle_eps == 9, tag + " oracle agrees");
    v.detail << tag << ": eps=" << (r.finite() ? *r.value : 0) << " oracle=" << oracle_eps << " in " << t << " s; ";
  }
}

void ac3(Verdict& v) {
  const Prime p(2);
  for (std::int64_t lambda : {0, 1}) {
    const DeltaResult d = delta_over_fixed_points(example_action(p, 2, FieldElement(lambda, p)));
    v.require(d.value == 4 && d.group_order == 4, "delta == |G| == 4 for lambda=" + std::to_string(lambda));
    v.detail << "lambda=" << lambda << ": delta=" << d.value << " |G|=" << d.group_order << "; ";
  }
}

void ac4(Verdict& v) {
  std::mt19937_64 rng(20260415);
  const SampleOptions options;
  std::size_t trials = 0, skipped = 0, failures = 0;
  std::map<std::string, std::size_t> coverage;
  while (trials < 600) {
    std::optional<TheoremTrial> t = sample_theorem_trial(rng, options);
    if (!t) {
      ++skipped;
      continue;
    }
    ++trials;
    const Prime p = t->spec.prime();
    bool ok = t->order <= 9 && t->spec.dimension() <= 3 && t->factorization.r <= 2;
    try {
      const ReductionResult r = reduce_degree(t->spec, t->invariant, t->point);
      const Polynomial& f = r.f_tilde;
      ok = ok && f.is_homogeneous() && f.total_degree() == t->factorization.p_power;
      ok = ok && is_invariant(f, t->spec) && invariant_under_all(f, enumerate_group(t->spec));
      ok = ok && evaluate(f, t->point) == FieldElement(1, p);
    } catch (const Error& e) {
      ok = false;
      std::cerr << "AC4 trial " << trials << ": " << e.what() << "\n";
    }
    if (!ok) ++failures;
    ++coverage["p=" + std::to_string(p.value()) + ",r=" + std::to_string(t->factorization.r) + ",d=" +
               std::to_string(t->factorization.d)];
  }
  v.require(failures == 0, std::to_string(failures) + " failed trials");
  v.require(trials >= 500, "at least 500 trials");
  v.detail << trials << " trials, " << failures << " failures, " << skipped << " draws without admissible degree; ";
  for (const auto& [k, c] : coverage) v.detail << k << ":" << c << " ";
}

void ac5(Verdict& v) {
  std::size_t groups = 0, points = 0, exceptions = 0;
  std::set<std::uint64_t> seen;
  auto check_group = [&](const GroupSpec& spec, std::size_t order, const std::vector<Vector>& fixed) {
    ++groups;
    InvariantSlices slices(spec);
    for (const auto& x : nonzero_span(fixed, spec.prime())) {
      ++points;
      const EpsilonResult r = epsilon(slices, x, order);
      if (!r.finite() || !is_one_or_p_power(*r.value, spec.prime().value())) {
        ++exceptions;
        continue;
      }
      seen.insert(*r.value);
    }
  };
  // the trial distribution of AC4, then larger groups up to order 27
  std::mt19937_64 rng(20260416);
  SampleOptions options;
  for (int i = 0; i < 200; ++i) {
    const SampledGroup g = sample_group(rng, options);
    check_group(g.spec, g.order, g.fixed_basis);
  }
  options.max_order = 27;
  for (int i = 0; i < 100; ++i) {
    const SampledGroup g = sample_group(rng, options);
    check_group(g.spec, g.order, g.fixed_basis);
  }
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t l = 0; l < q; ++l) {
      const GroupSpec spec = example_action(Prime(q), 2, FieldElement(l, Prime(q)));
      check_group(spec, enumerate_group(spec).order(), fixed_space(spec));
    }
  }
  v.require(exceptions == 0, std::to_string(exceptions) + " exceptions");
  v.detail << groups << " groups, " << points << " fixed points, " << exceptions << " exceptions; values seen:";
  for (auto e : seen) v.detail << " " << e;
}

void ac6(Verdict& v) {
  std::size_t cases = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (unsigned r = 0; r <= 3; ++r) {
      const std::uint64_t pr = checked_power(q, r);
      for (std::uint64_t d = 1; d <= 6; ++d) {
        for (std::uint64_t k = 1; k <= pr; ++k) {
          for (std::uint64_t j = 0; j <= pr - k; ++j) {
            ++cases;
            if (!lemma_congruence_holds(Prime(q), r, d, k, j)) {
              v.require(false, "lemma p=" + std::to_string(q) + " r=" + std::to_string(r) + " d=" +
                                   std::to_string(d) + " k=" + std::to_string(k) + " j=" + std::to_string(j));
            }
          }
        }
      }
    }
  }
  std::size_t lucas = 0;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    for (unsigned a = 0; a <= 200; ++a) {
      for (unsigned b = 0; b <= 200; ++b) {
        ++lucas;
        if (lucas_binomial(a, b, Prime(q)).residue() != oracle::binomial_mod(a, b, q)) {
          v.require(false, "lucas C(" + std::to_string(a) + "," + std::to_string(b) + ") mod " + std::to_string(q));
        }
      }
    }
  }
  v.detail << cases << " lemma cases, " << lucas << " binomials vs factorial oracle";
}

void ac7(Verdict& v) {
  // trivial group plus sampled groups whose separating degree admits a coprime multiple
  std::size_t checked = 0;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    const Prime p(q);
    for (std::uint32_t d = 1; d <= 7; ++d) {
      if (d % q == 0) continue;
      const ReductionResult r = reduce_degree(GroupSpec::trivial(p, 3),
                                              Polynomial::term(Monomial({d, 0, 0}), FieldElement(1, p)),
                                              Vector{FieldElement(1, p), FieldElement(0, p), FieldElement(0, p)});
      v.require(r.f_tilde == Polynomial::variable(p, 3, 0), "trivial group, x0^" + std::to_string(d));
      ++checked;
    }
  }
  std::mt19937_64 rng(20260417);
  SampleOptions options;
  options.max_r = 0;
  std::size_t sampled = 0;
  while (sampled < 100) {
    std::optional<TheoremTrial> t = sample_theorem_trial(rng, options);
    if (!t) continue;
    ++sampled;
    const ReductionResult r = reduce_degree(t->spec, t->invariant, t->point);
    v.require(r.factorization.r == 0, "sampled degree coprime to p");
    v.require(r.f_tilde.is_homogeneous() && r.f_tilde.total_degree() == 1, "sampled output is linear");
    v.require(is_invariant(r.f_tilde, t->spec) && evaluate(r.f_tilde, t->point) == FieldElement(1, t->spec.prime()),
              "sampled output invariant with value 1");
  }
  v.detail << checked << " trivial-group cases, " << sampled << " sampled r=0 cases";
}

void ac8(Verdict& v) {
  const Prime p(2);
  const GroupSpec spec(p, 2, {Matrix::from_rows(p, {{1, 1}, {0, 1}})});
  auto term = [&](std::uint32_t a, std::uint32_t b) { return Polynomial::term(Monomial({a, b}), FieldElement(1, p)); };
  const Polynomial f = poly_pow(term(2, 0) + term(1, 1), 3);
  // symbolic expansion of (x0^2 + x0 x1)^3 over GF(2)
  v.require(f == term(6, 0) + term(5, 1) + term(4, 2) + term(3, 3), "expansion of f");
  const ReductionResult r = reduce_degree(spec, f, Vector{FieldElement(1, p), FieldElement(0, p)});
  const Polynomial expected = term(2, 0) + term(1, 1) + term(0, 2);
  v.require(r.f_tilde == expected, "f~ == x0^2 + x0*x1 + x1^2");
  v.require(is_invariant(r.f_tilde, spec), "f~ invariant");
  v.detail << "f~ = " << r.f_tilde.to_string();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"AC1 example p=2 m=2: epsilon(e_2) = 4 with verified witness, < 1 s", ac1},
      {"AC2 example p=3 m=2: epsilon(e_2) = 9, nothing in degrees 1-8, < 60 s", ac2},
      {"AC3 example p=2 m=2: delta = |G| = 4", ac3},
      {"AC4 reduction returns degree p^r invariants with value 1 (>= 500 random trials)", ac4},
      {"AC5 epsilon at fixed points is 1 or a power of p", ac5},
      {"AC6 binomial congruence exhaustive, Lucas vs factorial oracle", ac6},
      {"AC7 coprime degree reduces to a linear invariant", ac7},
      {"AC8 GF(2) unipotent fixture reduces to x0^2 + x0*x1 + x1^2", ac8},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    const auto start = Clock::now();
    try {
      check(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << name << " (" << seconds_since(start) << " s) -- "
              << v.detail.str() << "\n";
    std::cout.flush();
    failed += v.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
