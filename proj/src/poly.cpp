#include "octet/poly.hpp"

#include <algorithm>

namespace octet {

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = deg(); i >= 0; i--) acc = acc * x + c[i];
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); i++) {
    if (i < a.c.size()) r.c[i] += a.c[i];
    if (i < b.c.size()) r.c[i] += b.c[i];
  }
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); i++) {
    if (i < a.c.size()) r.c[i] += a.c[i];
    if (i < b.c.size()) r.c[i] -= b.c[i];
  }
  r.trim();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.zero() || b.zero()) return Poly();
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); i++) {
    if (sgn(a.c[i]) == 0) continue;
    for (size_t j = 0; j < b.c.size(); j++) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

Poly operator*(const Rat& k, const Poly& a) {
  if (sgn(k) == 0) return Poly();
  Poly r = a;
  for (auto& v : r.c) v *= k;
  return r;
}

Poly operator-(const Poly& a) { return Rat(-1) * a; }

Poly derivative(const Poly& a) {
  Poly r;
  if (a.deg() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); i++) r.c[i - 1] = Rat((long)i) * a.c[i];
  r.trim();
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.zero()) throw Error("DivByZero", "polynomial division by zero");
  Poly r = a, q;
  if (a.deg() >= b.deg()) q.c.assign(a.deg() - b.deg() + 1, Rat(0));
  while (!r.zero() && r.deg() >= b.deg()) {
    Rat f = r.lead() / b.lead();
    int sh = r.deg() - b.deg();
    q.c[sh] = f;
    for (int i = 0; i <= b.deg(); i++) r.c[i + sh] -= f * b.c[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw Error("InexactDivision", "polynomial division had remainder");
  return q;
}

Poly gcd(Poly a, Poly b) {
  while (!b.zero()) {
    auto [q, r] = divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  Rat inv = 1 / a.lead();
  return inv * a;
}

Poly squarefree_part(const Poly& a) {
  if (a.deg() <= 0) return a;
  Poly g = gcd(a, derivative(a));
  if (g.deg() <= 0) return a;
  return divexact(a, g);
}

Poly primitive(const Poly& a, bool normalize_sign) {
  if (a.zero()) return a;
  Int l = 1;
  for (auto& v : a.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  Int g = 0;
  for (auto& v : a.c) {
    Int n = v.get_num() * (l / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Poly r = a;
  Rat f = Rat(l) / Rat(g);
  for (auto& v : r.c) {
    v *= f;
    v.canonicalize();
  }
  if (normalize_sign && sgn(r.lead()) < 0)
    for (auto& v : r.c) v = -v;
  return r;
}

SturmChain::SturmChain(const Poly& p) {
  s.push_back(p);
  s.push_back(derivative(p));
  while (!s.back().zero() && s.back().deg() >= 1) {
    auto [q, r] = divmod(s[s.size() - 2], s.back());
    (void)q;
    if (r.zero()) break;
    s.push_back(-r);
  }
  // If p was squarefree the chain ends in a nonzero constant.
}

static int variations(const std::vector<int>& signs) {
  int var = 0, last = 0;
  for (int x : signs) {
    if (x == 0) continue;
    if (last != 0 && x != last) var++;
    last = x;
  }
  return var;
}

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> sg;
  sg.reserve(s.size());
  for (auto& p : s) sg.push_back(p.sign_at(x));
  return variations(sg);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> sg;
  for (auto& p : s) {
    if (p.zero()) {
      sg.push_back(0);
      continue;
    }
    int l = sgn(p.lead());
    sg.push_back(p.deg() % 2 == 0 ? l : -l);
  }
  return variations(sg);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> sg;
  for (auto& p : s) sg.push_back(p.zero() ? 0 : sgn(p.lead()));
  return variations(sg);
}

int SturmChain::count_roots(const Rat& lo, const Rat& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all_roots() const {
  return variations_at_neg_inf() - variations_at_pos_inf();
}

Rat cauchy_root_bound(const Poly& p) {
  if (p.deg() < 1) return Rat(1);
  Rat m = 0;
  for (int i = 0; i < p.deg(); i++) {
    Rat a = abs(p.c[i] / p.lead());
    if (a > m) m = a;
  }
  return m + 1;
}

std::vector<RootInterval> isolate_roots(const Poly& p) {
  std::vector<RootInterval> out;
  if (p.deg() < 1) return out;
  SturmChain ch(p);
  Rat b = cauchy_root_bound(p);
  struct Item {
    Rat lo, hi;
    int n;
  };
  std::vector<Item> stack;
  int total = ch.count_roots(-b, b);
  if (total > 0) stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.n == 1 && p.sign_at(it.lo) != 0 && p.sign_at(it.hi) != 0) {
      out.push_back({it.lo, it.hi});
      continue;
    }
    // pick a split point that is not a root (at most deg(p) roots exist)
    Rat mid = (it.lo + it.hi) / 2;
    for (int k = 3; p.sign_at(mid) == 0; k += 2) mid = it.lo + (it.hi - it.lo) / k;
    int left = ch.count_roots(it.lo, mid);
    int right = it.n - left;
    if (right > 0) stack.push_back({mid, it.hi, right});
    if (left > 0) stack.push_back({it.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b2) {
    return a.lo < b2.lo;
  });
  return out;
}

void refine_interval(const Poly& p, RootInterval& iv) {
  Rat mid = (iv.lo + iv.hi) / 2;
  int sm = p.sign_at(mid);
  if (sm == 0) {
    // root exactly at mid: shrink symmetrically around it
    Rat w = (iv.hi - iv.lo) / 4;
    iv.lo = mid - w;
    iv.hi = mid + w;
    return;
  }
  int sl = p.sign_at(iv.lo);
  if (sl == 0) throw Error("Internal", "root at interval endpoint");
  if (sm != sl)
    iv.hi = mid;
  else
    iv.lo = mid;
}

void refine_interval_below(const Poly& p, RootInterval& iv, const Rat& width) {
  while (iv.hi - iv.lo >= width) refine_interval(p, iv);
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Poly acc;
  for (size_t i = 0; i < xs.size(); i++) {
    Poly term(Rat(1));
    Rat denom = 1;
    for (size_t j = 0; j < xs.size(); j++) {
      if (i == j) continue;
      term = term * Poly::from({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + (ys[i] / denom) * term;
  }
  return acc;
}

Poly det_poly(std::vector<std::vector<Poly>> m) {
  int n = (int)m.size();
  if (n == 0) return Poly(Rat(1));
  Poly denom(Rat(1));
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (m[k][k].zero()) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (!m[i][k].zero()) {
          p = i;
          break;
        }
      if (p < 0) return Poly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        Poly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divexact(t, denom);
      }
      m[i][k] = Poly();
    }
    denom = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

int degy(const PolyInY& p) {
  for (int i = (int)p.size() - 1; i >= 0; i--)
    if (!p[i].zero()) return i;
  return -1;
}

void trimy(PolyInY& p) {
  while (!p.empty() && p.back().zero()) p.pop_back();
}

PolyInY poly_in_y_derivative(const PolyInY& p) {
  PolyInY r;
  for (size_t i = 1; i < p.size(); i++) r.push_back(Rat((long)i) * p[i]);
  trimy(r);
  return r;
}

Poly resultant_y(const PolyInY& a0, const PolyInY& b0) {
  PolyInY a = a0, b = b0;
  trimy(a);
  trimy(b);
  int da = degy(a), db = degy(b);
  if (da < 0 || db < 0) return Poly();
  if (da == 0 && db == 0) return Poly(Rat(1));
  int n = da + db;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (int r = 0; r < db; r++)
    for (int i = 0; i <= da; i++) m[r][r + i] = a[da - i];
  for (int r = 0; r < da; r++)
    for (int i = 0; i <= db; i++) m[db + r][r + i] = b[db - i];
  return det_poly(std::move(m));
}

PolyInY pseudo_rem_y(const PolyInY& a0, const PolyInY& b0) {
  PolyInY r = a0, b = b0;
  trimy(r);
  trimy(b);
  int db = degy(b);
  if (db < 0) throw Error("DivByZero", "pseudo_rem by zero");
  const Poly lb = b[db];
  int guard = degy(r) - db + 1;
  int steps = 0;
  while (degy(r) >= db && degy(r) >= 0) {
    int dr = degy(r);
    Poly lr = r[dr];
    // r = lb * r - lr * y^(dr-db) * b
    PolyInY nr(std::max(r.size(), b.size() + (size_t)(dr - db)), Poly());
    for (int i = 0; i <= dr; i++) nr[i] = lb * r[i];
    for (int i = 0; i <= db; i++) nr[i + dr - db] = nr[i + dr - db] - lr * b[i];
    r = std::move(nr);
    trimy(r);
    if (++steps > guard + 2) throw Error("Internal", "pseudo_rem_y runaway");
  }
  return r;
}

Rat eval_poly_in_y(const PolyInY& p, const Rat& x, const Rat& y) {
  Rat acc = 0;
  for (int i = (int)p.size() - 1; i >= 0; i--) acc = acc * y + p[i].eval(x);
  return acc;
}

Poly specialize_inner(const PolyInY& p, const Rat& x) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (auto& q : p) c.push_back(q.eval(x));
  return Poly::from(std::move(c));
}

}  // namespace octet
