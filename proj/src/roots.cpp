#include "zlift/roots.hpp"

#include <cstdlib>

namespace zlift {

std::vector<PolynomialQ> sturm_sequence(const PolynomialQ& p) {
  std::vector<PolynomialQ> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    PolynomialQ r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

namespace {

int variations(const std::vector<PolynomialQ>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    const int s = q.evaluate(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at_infinity(const std::vector<PolynomialQ>& seq, bool positive) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.leading().sign();
    if (!positive && q.degree() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int count_roots(const PolynomialQ& p, const Rational& lo, const Rational& hi) {
  const auto seq = sturm_sequence(p);
  return variations(seq, lo) - variations(seq, hi) + (p.evaluate(lo) == 0 ? 1 : 0);
}

int count_real_roots(const PolynomialQ& p) {
  const auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

void RootIsolation::bisect(std::size_t i) {
  IntervalQ& iv = intervals_[i];
  if (iv.lo == iv.hi) return;
  const Rational m = iv.midpoint();
  const int sm = p_.evaluate(m).sign();
  if (sm == 0) {
    iv = IntervalQ(m);
    return;
  }
  if (sm != p_.evaluate(iv.hi).sign()) iv.lo = m;
  else iv.hi = m;
}

void RootIsolation::refine(std::size_t i, const Rational& width) {
  while (intervals_[i].width() > width) bisect(i);
}

void RootIsolation::refine_all(const Rational& width) {
  for (std::size_t i = 0; i < intervals_.size(); ++i) refine(i, width);
}

int RootIsolation::compare(std::size_t i, const Rational& c) {
  for (;;) {
    const IntervalQ& iv = intervals_[i];
    if (iv.lo == iv.hi) return (iv.lo - c).sign();
    if (c <= iv.lo) return 1;
    if (c >= iv.hi) return -1;
    if (p_.evaluate(c) == 0) return 0;
    bisect(i);
  }
}

RootIsolation isolate_roots(const PolynomialQ& p, const Rational& width) {
  if (p.degree() < 1) throw Error(Errc::invalid_argument, "root isolation needs degree >= 1");
  if (!is_squarefree(p)) throw Error(Errc::not_squarefree, "polynomial is not squarefree");
  const auto seq = sturm_sequence(p);

  Rational bound(0);
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, abs(Rational(p.coefficient(k) / p.leading())));
  bound += 1;

  std::vector<IntervalQ> found;
  // Half-open (lo, hi] pieces, left to right.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int c = variations(seq, lo) - variations(seq, hi);
    if (c == 0) continue;
    if (c > 1) {
      const Rational m = (lo + hi) / 2;
      stack.emplace_back(m, hi);
      stack.emplace_back(lo, m);
      continue;
    }
    if (p.evaluate(hi) == 0) {
      found.emplace_back(hi);
      continue;
    }
    if (p.evaluate(lo) == 0) {
      // lo belongs to the neighbour; move it off that root.
      Rational step = (hi - lo) / 2;
      for (;;) {
        const Rational cand = lo + step;
        if (variations(seq, lo) - variations(seq, cand) == 0) {
          lo = cand;
          break;
        }
        step /= 2;
      }
    }
    found.emplace_back(lo, hi);
  }

  RootIsolation iso(p, std::move(found));
  iso.refine_all(width);
  for (std::size_t i = 0; i + 1 < iso.size(); ++i) {
    while (iso[i].hi >= iso[i + 1].lo) {
      if (iso[i].width() > 0) iso.refine(i, iso[i].width() / 2);
      if (iso[i].hi >= iso[i + 1].lo && iso[i + 1].width() > 0)
        iso.refine(i + 1, iso[i + 1].width() / 2);
    }
  }
  return iso;
}

RootIsolation isolate_roots(const IntegerPolynomial& p, const Rational& width) {
  return isolate_roots(p.rational(), width);
}

bool is_totally_real(const IntegerPolynomial& p) {
  if (!is_irreducible(p)) throw Error(Errc::reducible, "polynomial " + to_string(p) + " is reducible");
  return count_real_roots(p.rational()) == p.degree();
}

Rational default_isolation_width() {
  if (const char* env = std::getenv("ZLIFT_ISOLATION_WIDTH"); env != nullptr && *env != '\0') {
    const Rational w = parse_rational(env);
    if (w <= 0) throw Error(Errc::invalid_argument, "ZLIFT_ISOLATION_WIDTH must be positive");
    return w;
  }
  return pow2_inverse(20);
}

}  // namespace zlift
