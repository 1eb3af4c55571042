#include "pfsm/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <optional>
#include <thread>

#include "pfsm/errors.hpp"

namespace pfsm {

namespace {

constexpr long kRadicalLimit = 9;

void check_word(const Word& w) {
  if (w.empty()) throw DomainError("empty word");
  for (int b : w)
    if (b != 0 && b != 1) throw DomainError("word entries must be 0 or 1");
}

AlgebraicReal exact_zero() { return AlgebraicReal{QPoly::variable(), Rational(0), Rational(0)}; }

// Real roots of M21 via mu = lambda^2: roots of the reduced polynomial in mu
// are lifted through q(lambda^2) for each minimal polynomial q that has a
// positive root.
std::vector<AlgebraicReal> lambda_zeros(const QPoly& m21, Parity parity) {
  QPoly f = m21;
  std::vector<AlgebraicReal> out;
  if (parity == Parity::Odd) {
    f = f / QPoly::variable();
    out.push_back(exact_zero());
  }
  QPoly g = even_reduce(f);
  if (g.degree() >= 1) {
    std::vector<QPoly> lifted;
    for (const auto& mu : isolate_real_roots(g, default_isolation_width())) {
      int s;
      if (mu.is_rational()) {
        s = sgn(mu.rational_value());
      } else {
        AlgebraicReal m = mu;
        while (sgn(m.lo) < 0 && sgn(m.hi) > 0) m = refine(m, (m.hi - m.lo) / 2);
        s = m.is_rational() ? sgn(m.rational_value()) : sgn(m.lo + m.hi);
      }
      if (s == 0 && parity != Parity::Odd) out.push_back(exact_zero());
      if (s <= 0) continue;
      if (std::find(lifted.begin(), lifted.end(), mu.minpoly) == lifted.end()) lifted.push_back(mu.minpoly);
    }
    for (const auto& q : lifted)
      for (const auto& r : isolate_real_roots(square_variable(q), default_isolation_width())) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }),
            out.end());
  return out;
}

}  // namespace

Mat2 SymbolicMonodromy::at(const Scalar& lambda) const {
  return {to_spoly(m11).evaluate(lambda), to_spoly(m12).evaluate(lambda), to_spoly(m21).evaluate(lambda),
          to_spoly(m22).evaluate(lambda)};
}

SymbolicMonodromy symbolic_monodromy(const Word& w) {
  check_word(w);
  QPoly one = QPoly::constant(Rational(1));
  SymbolicMonodromy m{one, {}, {}, one};
  for (int b : w) {
    QPoly a = b ? -QPoly::variable() : QPoly{};
    // T * M with T = [[a, -1], [1, 0]]
    m = {a * m.m11 - m.m21, a * m.m12 - m.m22, m.m11, m.m12};
  }
  return m;
}

SearchRecord counterexample_lambdas(const Word& w, bool rational_only) {
  SearchRecord rec;
  rec.word = w;
  rec.monodromy = symbolic_monodromy(w);
  rec.extrapolated = static_cast<long>(w.size()) > kRadicalLimit;
  const SymbolicMonodromy& m = rec.monodromy;
  if (!(m.m11 * m.m22 - m.m12 * m.m21 == QPoly::constant(Rational(1))))
    throw DomainError("internal: symbolic determinant is not 1 for word " + to_string(w));

  if (m.m21.is_zero()) {
    // M11 * M22 = 1 with integer polynomials forces |M11| = 1: never a
    // counterexample.
    rec.m21_identically_zero = true;
    rec.parity = Parity::Zero;
    return rec;
  }
  if (is_even(m.m21))
    rec.parity = Parity::Even;
  else if (is_odd(m.m21))
    rec.parity = Parity::Odd;
  else
    throw DomainError("M21 is neither even nor odd for word " + to_string(w) + ": " + to_string(m.m21, "lambda"));

  std::vector<AlgebraicReal> zeros = lambda_zeros(m.m21, rec.parity);

  // Independent checks: total count by Sturm, rational zeros by the rational
  // root test.
  int expected = SturmSequence(squarefree_part(m.m21)).count_real_roots();
  if (static_cast<int>(zeros.size()) != expected)
    throw DomainError("internal: zero count mismatch for word " + to_string(w));
  std::vector<Rational> rational = rational_roots(m.m21);
  std::vector<Rational> found;
  for (const auto& z : zeros)
    if (z.is_rational()) found.push_back(z.rational_value());
  if (found != rational) throw DomainError("internal: rational zero mismatch for word " + to_string(w));

  QPoly tr = m.trace();
  QPoly tr_test = tr * tr - QPoly::constant(Rational(4));
  QPoly m11_test = m.m11 * m.m11 - QPoly::constant(Rational(1));
  SPoly tr_s = to_spoly(tr);
  for (const auto& z : zeros) {
    ZeroRecord zr{z, Scalar::from_root(z), Scalar(), sign_at(tr_test, z), sign_at(m11_test, z), false};
    zr.trace = tr_s.evaluate(zr.lambda);
    zr.counterexample = zr.trace_sign > 0 && zr.m11_sign < 0;
    if (zr.counterexample) {
      if (z.is_rational()) rec.rational_counterexample_lambdas.push_back(zr.lambda);
      if (!rational_only || z.is_rational()) rec.counterexample_lambdas.push_back(zr.lambda);
    }
    rec.zeros.push_back(std::move(zr));
  }
  return rec;
}

Word word_from_index(unsigned long index, long period) {
  Word w(static_cast<std::size_t>(period));
  for (long i = 0; i < period; ++i) w[static_cast<std::size_t>(i)] = static_cast<int>((index >> i) & 1UL);
  return w;
}

unsigned long word_index(const Word& w) {
  unsigned long v = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) v |= 1UL << i;
  return v;
}

unsigned long orbit_representative(const Word& w) {
  unsigned long best = word_index(w);
  Word r(w.rbegin(), w.rend());
  for (const Word* base : std::initializer_list<const Word*>{&w, &r}) {
    Word s = *base;
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, word_index(s));
    }
  }
  return best;
}

long max_period_from_env() {
  const char* env = std::getenv("PERIODIC_FSM_MAX_K");
  if (!env || !*env) return 12;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 30) throw ParseError("PERIODIC_FSM_MAX_K must be an integer in [1, 30]");
  return v;
}

std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

namespace {

std::vector<SearchRecord> run_words(long period, const SearchOptions& opts, bool keep_all) {
  if (period < 1) throw DomainError("period must be at least 1");
  if (period > opts.max_period)
    throw DomainError("period " + std::to_string(period) + " exceeds the cap " + std::to_string(opts.max_period) +
                      "; raise PERIODIC_FSM_MAX_K to search further");
  unsigned long count = 1UL << period;
  std::vector<unsigned long> indices;
  for (unsigned long i = 0; i < count; ++i)
    if (!opts.dedupe || orbit_representative(word_from_index(i, period)) == i) indices.push_back(i);

  std::vector<std::optional<SearchRecord>> slots(indices.size());
  std::vector<std::exception_ptr> errors(indices.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < indices.size(); i += stride) {
      try {
        SearchRecord r = counterexample_lambdas(word_from_index(indices[i], period), opts.rational_only);
        if (keep_all || !r.counterexample_lambdas.empty()) slots[i] = std::move(r);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<SearchRecord> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

}  // namespace

FamilyResult classify_family(long period, const SearchOptions& opts) {
  FamilyResult res;
  res.period = period;
  res.rational_only = opts.rational_only;
  res.deduplicated = opts.dedupe;
  res.extrapolated = period > kRadicalLimit;
  res.records = run_words(period, opts, false);
  unsigned long count = 1UL << period;
  for (unsigned long i = 0; i < count; ++i)
    if (!opts.dedupe || orbit_representative(word_from_index(i, period)) == i) ++res.words_checked;
  return res;
}

std::vector<SearchRecord> analyze_all_words(long period, const SearchOptions& opts) {
  return run_words(period, opts, true);
}

}  // namespace pfsm
