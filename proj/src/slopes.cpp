#include "ploi/slopes.hpp"

#include <algorithm>
#include <set>

#include "ploi/error.hpp"
#include "ploi/orbitals.hpp"

namespace ploi {

namespace {

using Vec = std::vector<mpz_class>;

// Refines the inputs into pairwise coprime factors > 1 such that every input
// is a product of powers of them.
std::vector<mpz_class> coprime_base(const std::vector<mpz_class>& inputs) {
  std::set<mpz_class> s;
  for (const auto& n : inputs) {
    mpz_class a = abs(n);
    if (a > 1) s.insert(a);
  }
  for (;;) {
    std::optional<std::pair<mpz_class, mpz_class>> hit;
    for (auto i = s.begin(); i != s.end() && !hit; ++i)
      for (auto j = std::next(i); j != s.end(); ++j)
        if (gcd(*i, *j) != 1) {
          hit.emplace(*i, *j);
          break;
        }
    if (!hit) break;
    auto [a, b] = *hit;
    mpz_class g = gcd(a, b);
    s.erase(a);
    s.erase(b);
    for (const mpz_class& x : {mpz_class(a / g), mpz_class(b / g), g})
      if (x > 1) s.insert(x);
  }
  return {s.begin(), s.end()};
}

void add_exponents(mpz_class n, const std::vector<mpz_class>& base, Vec& out, std::size_t offset, int sign) {
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (n % base[i] == 0) {
      n /= base[i];
      out[offset + i] += sign;
    }
  }
  if (n != 1) throw Error("internal: number does not factor over its coprime base");
}

void collect(const SlopePair& p, std::vector<mpz_class>& nums) {
  for (const Rational* r : {&p.left, &p.right}) {
    nums.push_back(r->numerator());
    nums.push_back(r->denominator());
  }
}

Vec exponent_vector(const SlopePair& p, const std::vector<mpz_class>& base) {
  const std::size_t k = base.size();
  Vec v(2 * k, 0);
  add_exponents(p.left.numerator(), base, v, 0, 1);
  add_exponents(p.left.denominator(), base, v, 0, -1);
  add_exponents(p.right.numerator(), base, v, k, 1);
  add_exponents(p.right.denominator(), base, v, k, -1);
  return v;
}

Rational from_exponents(const Vec& v, std::size_t offset, const std::vector<mpz_class>& base) {
  mpz_class num = 1, den = 1;
  for (std::size_t i = 0; i < base.size(); ++i) {
    mpz_class e = v[offset + i];
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), base[i].get_mpz_t(), mpz_class(abs(e)).get_ui());
    if (e > 0) num *= p;
    else if (e < 0) den *= p;
  }
  return Rational(num, den);
}

// Integer row echelon form; returns the nonzero rows.
std::vector<Vec> echelon(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (pivot == rows.size() || abs(rows[i][c]) < abs(rows[pivot][c])) pivot = i;
      }
      if (pivot == rows.size()) break;
      std::swap(rows[r], rows[pivot]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

std::size_t block_rank(const std::vector<Vec>& rows, std::size_t offset, std::size_t k) {
  std::vector<Vec> block;
  for (const auto& row : rows) block.emplace_back(row.begin() + offset, row.begin() + offset + k);
  return echelon(std::move(block)).size();
}

}  // namespace

std::string to_string(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Trivial: return "Trivial";
    case LatticeKind::Cyclic: return "Cyclic";
    case LatticeKind::HigherRank: return "HigherRank";
  }
  return "?";
}

SlopePair phi(const PLMap& h, const Interval& a) {
  auto [l, r] = end_slopes(h, a);
  return {std::move(l), std::move(r)};
}

LatticeVerdict image_lattice(const GroupSpec& g, const Interval& a) {
  LatticeVerdict v;
  if (g.is_trivial()) return v;
  auto orbs = group_orbitals(g);
  if (std::find(orbs.begin(), orbs.end(), a) == orbs.end())
    throw DomainError(a.str() + " is not an orbital of the group");

  std::vector<SlopePair> pairs;
  std::vector<mpz_class> nums;
  for (const auto& gen : g.generators()) {
    pairs.push_back(phi(gen, a));
    collect(pairs.back(), nums);
  }
  v.base = coprime_base(nums);
  const std::size_t k = v.base.size();
  std::vector<Vec> rows;
  for (const auto& p : pairs) rows.push_back(exponent_vector(p, v.base));
  v.basis = echelon(rows);
  v.rank = static_cast<int>(v.basis.size());
  std::size_t rank = v.basis.size();
  v.imbalanced = rank > block_rank(v.basis, 0, k) || rank > block_rank(v.basis, k, k);
  if (rank == 0) {
    v.kind = LatticeKind::Trivial;
  } else if (rank == 1) {
    v.kind = LatticeKind::Cyclic;
    SlopePair gen{from_exponents(v.basis[0], 0, v.base), from_exponents(v.basis[0], k, v.base)};
    if (gen.left < Rational(1) || (gen.left.is_one() && gen.right < Rational(1))) gen = gen.inverse();
    v.generator = gen;
  } else {
    v.kind = LatticeKind::HigherRank;
  }
  return v;
}

PLMap find_controller(const GroupSpec& g, const Interval& a, int radius, std::size_t cap) {
  LatticeVerdict v = image_lattice(g, a);
  if (v.kind != LatticeKind::Cyclic)
    throw DomainError("no controller on " + a.str() + ": slope image is " + to_string(v.kind));
  const SlopePair& gen = *v.generator;
  const SlopePair inv = gen.inverse();
  WordBall b = ball(g, radius, cap);
  for (const auto& h : b.elements) {
    SlopePair p = phi(h, a);
    if (p == gen || p == inv) return h;
  }
  throw SearchExhausted("no element of the radius-" + std::to_string(radius) + " ball has slope pair " + gen.str() +
                        " on " + a.str());
}

std::optional<long> slope_log(const SlopePair& target, const SlopePair& base) {
  std::vector<mpz_class> nums;
  collect(target, nums);
  collect(base, nums);
  auto cb = coprime_base(nums);
  Vec vt = exponent_vector(target, cb);
  Vec vb = exponent_vector(base, cb);
  auto nz = std::find_if(vb.begin(), vb.end(), [](const mpz_class& x) { return x != 0; });
  if (nz == vb.end()) {
    bool zero = std::all_of(vt.begin(), vt.end(), [](const mpz_class& x) { return x == 0; });
    return zero ? std::optional<long>(0) : std::nullopt;
  }
  std::size_t i = static_cast<std::size_t>(nz - vb.begin());
  if (vt[i] % vb[i] != 0) return std::nullopt;
  mpz_class k = vt[i] / vb[i];
  for (std::size_t j = 0; j < vb.size(); ++j)
    if (vt[j] != k * vb[j]) return std::nullopt;
  if (!k.fits_slong_p()) return std::nullopt;
  return k.get_si();
}

CForm c_form(const PLMap& h, const PLMap& c, const Interval& a) {
  SlopePair ph = phi(h, a);
  SlopePair pc = phi(c, a);
  auto k = slope_log(ph, pc);
  if (!k) throw DomainError("slope pair " + ph.str() + " is not a power of " + pc.str() + " on " + a.str());
  CForm out{*k, compose(power(c, -*k), h)};
  if (realizes_end(out.residue, a, End::Left) || realizes_end(out.residue, a, End::Right))
    throw Error("internal: c-form residue realizes an end of " + a.str());
  return out;
}

bool is_consistent_controller(const PLMap& c, const Interval& a) {
  SlopePair p = phi(c, a);
  Rational one(1);
  return (p.left > one && p.right < one) || (p.left < one && p.right > one);
}

bool controller_realizes(const PLMap& c, const Interval& a) { return has_orbital(c, a); }

}  // namespace ploi
