#include "qav/matrix.hpp"

#include <algorithm>
#include <map>

#include "qav/errors.hpp"

namespace qav {

MatrixRF MatrixRF::identity(int size) {
  MatrixRF m(size, size);
  for (int i = 0; i < size; ++i) m.at(i, i) = RatFunc(1);
  return m;
}

MatrixRF MatrixRF::operator+(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw BadArgument("matrix shape mismatch");
  MatrixRF r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

MatrixRF MatrixRF::operator-(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw BadArgument("matrix shape mismatch");
  MatrixRF r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

MatrixRF MatrixRF::operator*(const MatrixRF& o) const {
  if (cols_ != o.rows_) throw BadArgument("matrix shape mismatch");
  MatrixRF r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RatFunc& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const RatFunc& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

MatrixRF MatrixRF::scaled(const RatFunc& c) const {
  MatrixRF r(rows_, cols_);
  if (c.is_zero()) return r;
  for (size_t k = 0; k < e_.size(); ++k)
    if (!e_[k].is_zero()) r.e_[k] = e_[k] * c;
  return r;
}

bool MatrixRF::operator==(const MatrixRF& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool MatrixRF::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool MatrixRF::is_scalar(RatFunc* value) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const RatFunc& d = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
    }
  if (value) *value = d;
  return true;
}

MatrixRF MatrixRF::transpose_plain() const {
  MatrixRF r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

MatrixRF MatrixRF::substitute(Var v, const RatFunc& val) const {
  MatrixRF r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k)
    if (!e_[k].is_zero()) r.e_[k] = e_[k].substitute(v, val);
  return r;
}

MatrixRF MatrixRF::eval_partial(const std::array<std::optional<BigRat>, kNumVars>& pt) const {
  MatrixRF r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k)
    if (!e_[k].is_zero()) r.e_[k] = e_[k].eval_partial(pt);
  return r;
}

std::optional<std::pair<int, int>> MatrixRF::first_difference(const MatrixRF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return std::make_pair(-1, -1);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != o.at(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

long TensorOp::dim() const {
  long d = 1;
  for (int k = 0; k < m; ++k) d *= N();
  return d;
}

TensorOp tensor_identity(int n, int m) {
  TensorOp t{n, m, {}};
  t.mat = MatrixRF::identity(int(t.dim()));
  return t;
}

TensorOp unit(int i, int j, int n) {
  if (i < 1 || j < 1 || i > 2 * n || j > 2 * n) throw BadIndex("matrix unit index");
  TensorOp t{n, 1, MatrixRF(2 * n, 2 * n)};
  t.mat.at(i - 1, j - 1) = RatFunc(1);
  return t;
}

TensorOp kron(const TensorOp& a, const TensorOp& b) {
  if (a.n != b.n) throw BadArgument("rank mismatch in kron");
  int da = int(a.dim()), db = int(b.dim());
  TensorOp t{a.n, a.m + b.m, MatrixRF(da * db, da * db)};
  for (int ra = 0; ra < da; ++ra)
    for (int ca = 0; ca < da; ++ca) {
      const RatFunc& x = a.mat.at(ra, ca);
      if (x.is_zero()) continue;
      for (int rb = 0; rb < db; ++rb)
        for (int cb = 0; cb < db; ++cb) {
          const RatFunc& y = b.mat.at(rb, cb);
          if (y.is_zero()) continue;
          t.mat.at(ra * db + rb, ca * db + cb) = x * y;
        }
    }
  return t;
}

namespace {

// Decompose a flat index into 0-based digits, factor 1 most significant.
void digits_of(long idx, int N, int m, int* out) {
  for (int k = m - 1; k >= 0; --k) {
    out[k] = int(idx % N);
    idx /= N;
  }
}

long index_of(const int* digits, int N, int m) {
  long idx = 0;
  for (int k = 0; k < m; ++k) idx = idx * N + digits[k];
  return idx;
}

}  // namespace

TensorOp embed(const TensorOp& op, const std::vector<int>& positions, int total) {
  if (int(positions.size()) != op.m) throw BadArgument("embed: wrong number of positions");
  std::vector<bool> taken(total + 1, false);
  for (int p : positions) {
    if (p < 1 || p > total) throw BadIndex("embed: position out of range");
    if (taken[p]) throw BadArgument("embed: position collision");
    taken[p] = true;
  }
  int N = op.N();
  TensorOp t{op.n, total, MatrixRF(0, 0)};
  long dim = t.dim();
  t.mat = MatrixRF(int(dim), int(dim));
  std::vector<int> rest;  // passive factors
  for (int p = 1; p <= total; ++p)
    if (!taken[p]) rest.push_back(p);
  long passive = 1;
  for (size_t k = 0; k < rest.size(); ++k) passive *= N;

  std::vector<int> rd(op.m), cd(op.m), rowd(total), cold(total), xd(rest.size());
  for (int r = 0; r < op.mat.rows(); ++r)
    for (int c = 0; c < op.mat.cols(); ++c) {
      const RatFunc& x = op.mat.at(r, c);
      if (x.is_zero()) continue;
      digits_of(r, N, op.m, rd.data());
      digits_of(c, N, op.m, cd.data());
      for (long pidx = 0; pidx < passive; ++pidx) {
        digits_of(pidx, N, int(rest.size()), xd.data());
        for (int k = 0; k < op.m; ++k) {
          rowd[positions[k] - 1] = rd[k];
          cold[positions[k] - 1] = cd[k];
        }
        for (size_t k = 0; k < rest.size(); ++k) {
          rowd[rest[k] - 1] = xd[k];
          cold[rest[k] - 1] = xd[k];
        }
        t.mat.at(int(index_of(rowd.data(), N, total)),
                 int(index_of(cold.data(), N, total))) = x;
      }
    }
  return t;
}

TensorOp partial_transpose(const TensorOp& op, int factor) {
  if (factor < 1 || factor > op.m) throw BadIndex("partial_transpose factor");
  int N = op.N();
  TensorOp t{op.n, op.m, MatrixRF(op.mat.rows(), op.mat.cols())};
  std::vector<int> rd(op.m), cd(op.m);
  for (int r = 0; r < op.mat.rows(); ++r)
    for (int c = 0; c < op.mat.cols(); ++c) {
      const RatFunc& x = op.mat.at(r, c);
      if (x.is_zero()) continue;
      digits_of(r, N, op.m, rd.data());
      digits_of(c, N, op.m, cd.data());
      // e_{ij} -> e_{j'i'} on the chosen factor (0-based: i -> N-1-i primes)
      int i = rd[factor - 1], j = cd[factor - 1];
      rd[factor - 1] = N - 1 - j;
      cd[factor - 1] = N - 1 - i;
      t.mat.at(int(index_of(rd.data(), N, op.m)), int(index_of(cd.data(), N, op.m))) = x;
    }
  return t;
}

TensorOp dmatrix(int n) {
  CartanDatum c = build_cartan(n);
  TensorOp t{n, 1, MatrixRF(2 * n, 2 * n)};
  for (int i = 1; i <= 2 * n; ++i) t.mat.at(i - 1, i - 1) = RatFunc::q_pow(c.bar[i]);
  return t;
}

TensorOp restrict_band(const TensorOp& op, int lo) {
  int N = op.N();
  int hi = N + 1 - lo;
  if (lo < 1 || lo > op.n) throw BadArgument("restrict band must be symmetric and nonempty");
  int Np = hi - lo + 1;
  TensorOp t{Np / 2, op.m, MatrixRF(0, 0)};
  long dim = t.dim();
  t.mat = MatrixRF(int(dim), int(dim));
  std::vector<int> rd(op.m), cd(op.m);
  for (int r = 0; r < op.mat.rows(); ++r)
    for (int c = 0; c < op.mat.cols(); ++c) {
      const RatFunc& x = op.mat.at(r, c);
      if (x.is_zero()) continue;
      digits_of(r, N, op.m, rd.data());
      digits_of(c, N, op.m, cd.data());
      bool in_band = true;
      for (int k = 0; k < op.m && in_band; ++k)
        in_band = rd[k] >= lo - 1 && rd[k] <= hi - 1 && cd[k] >= lo - 1 && cd[k] <= hi - 1;
      if (!in_band) continue;
      for (int k = 0; k < op.m; ++k) {
        rd[k] -= lo - 1;
        cd[k] -= lo - 1;
      }
      t.mat.at(int(index_of(rd.data(), Np, op.m)), int(index_of(cd.data(), Np, op.m))) = x;
    }
  return t;
}

TensorOp flip(int n) {
  int N = 2 * n;
  TensorOp t{n, 2, MatrixRF(N * N, N * N)};
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) t.mat.at(i * N + j, j * N + i) = RatFunc(1);
  return t;
}

// --- numeric path ---------------------------------------------------------

NumSparse NumSparse::identity(int size) {
  NumSparse s;
  s.rows = s.cols = size;
  s.row.resize(size);
  for (int i = 0; i < size; ++i) s.row[i].push_back({i, BigRat(1)});
  return s;
}

NumSparse NumSparse::operator*(const NumSparse& o) const {
  if (cols != o.rows) throw BadArgument("sparse shape mismatch");
  NumSparse r;
  r.rows = rows;
  r.cols = o.cols;
  r.row.resize(rows);
  std::map<int, BigRat> acc;
  for (int i = 0; i < rows; ++i) {
    acc.clear();
    for (const auto& [k, a] : row[i])
      for (const auto& [j, b] : o.row[k]) {
        auto [it, fresh] = acc.emplace(j, a * b);
        if (!fresh) it->second += a * b;
      }
    for (auto& [j, v] : acc)
      if (v != 0) r.row[i].push_back({j, v});
  }
  return r;
}

bool NumSparse::operator==(const NumSparse& o) const {
  return rows == o.rows && cols == o.cols && row == o.row;
}

NumSparse NumSparse::scaled(const BigRat& c) const {
  NumSparse r;
  r.rows = rows;
  r.cols = cols;
  r.row.resize(rows);
  if (c == 0) return r;
  for (int i = 0; i < rows; ++i)
    for (const auto& [j, v] : row[i]) r.row[i].push_back({j, v * c});
  return r;
}

std::vector<std::pair<int, BigRat>> NumSparse::apply(
    const std::vector<std::pair<int, BigRat>>& x) const {
  std::vector<std::pair<int, BigRat>> y;
  for (int i = 0; i < rows; ++i) {
    BigRat acc(0);
    auto it = x.begin();
    auto jt = row[i].begin();
    while (it != x.end() && jt != row[i].end()) {
      if (it->first < jt->first)
        ++it;
      else if (jt->first < it->first)
        ++jt;
      else {
        acc += it->second * jt->second;
        ++it, ++jt;
      }
    }
    if (acc != 0) y.push_back({i, acc});
  }
  return y;
}

std::vector<std::pair<int, BigRat>> NumSparse::apply_left(
    const std::vector<std::pair<int, BigRat>>& x) const {
  std::map<int, BigRat> acc;
  for (const auto& [i, xv] : x)
    for (const auto& [j, a] : row[i]) {
      auto [it, fresh] = acc.emplace(j, xv * a);
      if (!fresh) it->second += xv * a;
    }
  std::vector<std::pair<int, BigRat>> y;
  for (auto& [j, v] : acc)
    if (v != 0) y.push_back({j, v});
  return y;
}

NumSparse eval_matrix(const MatrixRF& m, const PowerCache& pc) {
  NumSparse s;
  s.rows = m.rows();
  s.cols = m.cols();
  s.row.resize(s.rows);
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) {
      const RatFunc& e = m.at(i, j);
      if (e.is_zero()) continue;
      BigRat v = e.eval(pc);
      if (v != 0) s.row[i].push_back({j, v});
    }
  return s;
}

NumSparse num_embed(const NumSparse& two_factor, int N, const std::vector<int>& positions,
                    int total) {
  if (positions.size() != 2) throw BadArgument("num_embed expects a two-factor operator");
  long dim = 1;
  for (int k = 0; k < total; ++k) dim *= N;
  NumSparse s;
  s.rows = s.cols = int(dim);
  s.row.resize(s.rows);
  std::vector<int> rest;
  for (int p = 1; p <= total; ++p)
    if (p != positions[0] && p != positions[1]) rest.push_back(p);
  long passive = 1;
  for (size_t k = 0; k < rest.size(); ++k) passive *= N;
  std::vector<int> rowd(total), cold(total), xd(rest.size());
  for (int r = 0; r < two_factor.rows; ++r)
    for (const auto& [c, val] : two_factor.row[r]) {
      int rd[2] = {r / N, r % N}, cd[2] = {c / N, c % N};
      for (long pidx = 0; pidx < passive; ++pidx) {
        digits_of(pidx, N, int(rest.size()), xd.data());
        for (int k = 0; k < 2; ++k) {
          rowd[positions[k] - 1] = rd[k];
          cold[positions[k] - 1] = cd[k];
        }
        for (size_t k = 0; k < rest.size(); ++k) {
          rowd[rest[k] - 1] = xd[k];
          cold[rest[k] - 1] = xd[k];
        }
        s.row[index_of(rowd.data(), N, total)].push_back(
            {int(index_of(cold.data(), N, total)), val});
      }
    }
  for (auto& r : s.row) std::sort(r.begin(), r.end());
  return s;
}

// --- product identity checking -------------------------------------------

DegreeBound matrix_clear_bound(const MatrixRF& m) {
  DegreeBound b;
  std::vector<MPoly> dens;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m.at(i, j);
      if (e.is_zero()) continue;
      for (int k = 0; k < kNumVars; ++k) {
        Var v = Var(k);
        int w = e.num().deg(v) - e.num().lowdeg(v);
        if (w > b[v]) b[v] = w;
      }
      if (!e.den().is_constant() &&
          std::find(dens.begin(), dens.end(), e.den()) == dens.end())
        dens.push_back(e.den());
    }
  for (const auto& d : dens)
    for (int k = 0; k < kNumVars; ++k) {
      Var v = Var(k);
      b[v] += d.deg(v) - d.lowdeg(v);
    }
  return b;
}

namespace {

// Per-variable widths of an MPoly (for q this is what bounds root counts).
std::array<int, kNumVars> widths(const MPoly& p) {
  std::array<int, kNumVars> w{};
  for (int k = 0; k < kNumVars; ++k) w[k] = p.deg(Var(k)) - p.lowdeg(Var(k));
  return w;
}

struct FactorClearing {
  std::vector<MPoly> dens;              // distinct denominators
  std::array<int, kNumVars> lcm_w{};    // widths of their product
  std::array<int, kNumVars> cleared{};  // max entry width after clearing
};

FactorClearing factor_clearing(const MatrixRF& m) {
  FactorClearing fc;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m.at(i, j);
      if (e.is_zero() || e.den().is_constant()) continue;
      if (std::find(fc.dens.begin(), fc.dens.end(), e.den()) == fc.dens.end())
        fc.dens.push_back(e.den());
    }
  for (const auto& d : fc.dens) {
    auto w = widths(d);
    for (int k = 0; k < kNumVars; ++k) fc.lcm_w[k] += w[k];
  }
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const RatFunc& e = m.at(i, j);
      if (e.is_zero()) continue;
      auto wn = widths(e.num()), wd = widths(e.den());
      for (int k = 0; k < kNumVars; ++k)
        fc.cleared[k] = std::max(fc.cleared[k], wn[k] + fc.lcm_w[k] - wd[k]);
    }
  return fc;
}

std::array<bool, kNumVars> side_vars(const ProductSide& s) {
  std::array<bool, kNumVars> used{};
  for (int k = 0; k < kNumVars; ++k) {
    used[k] = s.scalar.uses(Var(k));
    for (const auto& f : s.factors)
      for (int i = 0; i < f.rows() && !used[k]; ++i)
        for (int j = 0; j < f.cols() && !used[k]; ++j)
          if (f.at(i, j).uses(Var(k))) used[k] = true;
  }
  return used;
}

MatrixRF multiply_side(const ProductSide& s) {
  MatrixRF acc = s.factors.front();
  for (size_t k = 1; k < s.factors.size(); ++k) acc = acc * s.factors[k];
  return acc.scaled(s.scalar);
}

NumSparse multiply_side_numeric(const ProductSide& s, const PowerCache& pc) {
  NumSparse acc = eval_matrix(s.factors.front(), pc);
  for (size_t k = 1; k < s.factors.size(); ++k)
    acc = acc * eval_matrix(s.factors[k], pc);
  BigRat den = eval_poly(s.scalar.den(), pc);
  if (den == 0) throw PoleAtSamplePoint("product scalar");
  return acc.scaled(eval_poly(s.scalar.num(), pc) / den);
}

}  // namespace

DegreeBound cleared_product_bound(const ProductSide& lhs, const ProductSide& rhs) {
  std::vector<FactorClearing> fl, fr;
  for (const auto& f : lhs.factors) fl.push_back(factor_clearing(f));
  for (const auto& f : rhs.factors) fr.push_back(factor_clearing(f));
  auto multiset_key = [](const std::vector<FactorClearing>& fs) {
    std::vector<std::string> keys;
    for (const auto& f : fs) {
      std::string k;
      for (const auto& d : f.dens) k += d.str() + ";";
      keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  std::array<int, kNumVars> alpha{}, beta{}, da{}, db{};
  for (const auto& f : fl)
    for (int k = 0; k < kNumVars; ++k) {
      alpha[k] += f.cleared[k];
      da[k] += f.lcm_w[k];
    }
  for (const auto& f : fr)
    for (int k = 0; k < kNumVars; ++k) {
      beta[k] += f.cleared[k];
      db[k] += f.lcm_w[k];
    }
  bool shared = multiset_key(fl) == multiset_key(fr);
  DegreeBound b;
  auto wsl_n = widths(lhs.scalar.num()), wsl_d = widths(lhs.scalar.den());
  auto wsr_n = widths(rhs.scalar.num()), wsr_d = widths(rhs.scalar.den());
  for (int k = 0; k < kNumVars; ++k) {
    int l = alpha[k] + (shared ? 0 : db[k]);
    int r = beta[k] + (shared ? 0 : da[k]);
    // Cross-multiplied scalars multiply the opposite side.
    l += wsl_n[k] + wsr_d[k];
    r += wsr_n[k] + wsl_d[k];
    b.b[k] = std::max(l, r);
  }
  return b;
}

IdentityResult product_identity_holds(const ProductSide& lhs, const ProductSide& rhs,
                                      Mode mode, int retry_limit) {
  IdentityResult res;
  if (mode == Mode::symbolic) {
    MatrixRF l = multiply_side(lhs);
    MatrixRF r = multiply_side(rhs);
    auto diff = l.first_difference(r);
    res.equal = !diff.has_value();
    if (diff)
      res.counterexample = "entry (" + std::to_string(diff->first) + ", " +
                           std::to_string(diff->second) + "): " +
                           l.at(diff->first, diff->second).str() + " vs " +
                           r.at(diff->first, diff->second).str();
    return res;
  }
  DegreeBound bound = cleared_product_bound(lhs, rhs);
  auto ul = side_vars(lhs), ur = side_vars(rhs);
  std::array<bool, kNumVars> used{};
  for (int k = 0; k < kNumVars; ++k) used[k] = ul[k] || ur[k];

  std::array<int, kNumVars> offset{};
  for (int attempt = 0;; ++attempt) {
    std::array<int, kNumVars> idx{};
    bool restarted = false, done = false;
    while (!done) {
      std::array<std::optional<BigRat>, kNumVars> pt{};
      for (int k = 0; k < kNumVars; ++k)
        if (used[k]) pt[k] = BigRat(2 * (offset[k] + idx[k]) + 3, 2);
      PowerCache pc(pt);
      try {
        ++res.grid_points;
        NumSparse l = multiply_side_numeric(lhs, pc);
        NumSparse r = multiply_side_numeric(rhs, pc);
        if (!(l == r)) {
          res.equal = false;
          std::string where;
          for (int k = 0; k < kNumVars; ++k)
            if (pt[k]) {
              if (!where.empty()) where += ", ";
              where += std::string(var_name(Var(k))) + " = " + to_string(*pt[k]);
            }
          res.counterexample = "numeric mismatch at " + where;
          return res;
        }
      } catch (const PoleAtSamplePoint&) {
        if (attempt >= retry_limit) throw;
        ++res.retries;
        for (int k = 0; k < kNumVars; ++k)
          if (used[k]) offset[k] += 1 + k;
        restarted = true;
        break;
      }
      done = true;
      for (int k = 0; k < kNumVars; ++k) {
        if (!used[k]) continue;
        if (idx[k] < bound[Var(k)]) {
          ++idx[k];
          done = false;
          break;
        }
        idx[k] = 0;
      }
    }
    if (!restarted) break;
  }
  res.equal = true;
  return res;
}

}  // namespace qav
