#include "sl2cat/presented_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace sl2cat {

IndexSet IndexSet::finite(std::size_t n) {
  if (n == 0) throw std::invalid_argument("finite index set needs n >= 1");
  return {Kind::Finite, n};
}

std::string to_string(const IndexSet& s) {
  switch (s.kind) {
    case IndexSet::Kind::Finite: return "finite(" + std::to_string(s.n) + ")";
    case IndexSet::Kind::Nat: return "nat";
    case IndexSet::Kind::Int: return "int";
  }
  return "?";
}

namespace {

Index as_index(std::size_t n) { return static_cast<Index>(n); }

void drop_zeros(PresentedMatrix::Entries& e) {
  for (auto it = e.begin(); it != e.end();) {
    it = it->second == 0 ? e.erase(it) : std::next(it);
  }
}

void drop_zeros(PresentedMatrix::Diagonals& d) {
  for (auto it = d.begin(); it != d.end();) {
    it = it->second == 0 ? d.erase(it) : std::next(it);
  }
}

PresentedMatrix::Diagonals convolve(const PresentedMatrix::Diagonals& a, const PresentedMatrix::Diagonals& b) {
  PresentedMatrix::Diagonals out;
  for (const auto& [da, va] : a) {
    for (const auto& [db, vb] : b) out[da + db] += va * vb;
  }
  drop_zeros(out);
  return out;
}

void require_same_index(const PresentedMatrix& a, const PresentedMatrix& b) {
  if (!(a.index() == b.index())) {
    throw IncompatibleIndex("index sets differ: " + to_string(a.index()) + " vs " + to_string(b.index()));
  }
}

}  // namespace

PresentedMatrix::PresentedMatrix(IndexSet index, std::size_t head_size, Entries head, Diagonals diagonals)
    : index_(index), head_size_(head_size), head_(std::move(head)), diagonals_(std::move(diagonals)) {
  drop_zeros(head_);
  drop_zeros(diagonals_);
  switch (index_.kind) {
    case IndexSet::Kind::Finite:
      if (!diagonals_.empty()) throw std::invalid_argument("finite matrices have no tail");
      head_size_ = index_.n;
      for (const auto& [ij, v] : head_) {
        if (ij.first < 0 || ij.second < 0 || ij.first >= as_index(index_.n) || ij.second >= as_index(index_.n)) {
          throw std::invalid_argument("entry outside finite index range");
        }
      }
      break;
    case IndexSet::Kind::Int:
      if (head_size_ != 0 || !head_.empty()) throw std::invalid_argument("int-indexed matrices are pure Toeplitz");
      break;
    case IndexSet::Kind::Nat:
      for (const auto& [ij, v] : head_) {
        if (ij.first < 0 || ij.second < 0) throw std::invalid_argument("negative index in nat-indexed head");
        if (std::min(ij.first, ij.second) >= as_index(head_size_)) {
          throw std::invalid_argument("head entry outside the head region");
        }
      }
      normalize();
      break;
  }
}

PresentedMatrix PresentedMatrix::zero(IndexSet index) { return PresentedMatrix(index, 0, {}, {}); }

PresentedMatrix PresentedMatrix::identity(IndexSet index) {
  if (index.is_finite()) {
    Entries e;
    for (std::size_t i = 0; i < index.n; ++i) e[{as_index(i), as_index(i)}] = 1;
    return PresentedMatrix(index, index.n, std::move(e), {});
  }
  return PresentedMatrix(index, 0, {}, {{0, Integer(1)}});
}

PresentedMatrix PresentedMatrix::from_dense(const DenseMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("dense matrix must be square and nonempty");
  Entries e;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) e[{as_index(i), as_index(j)}] = m(i, j);
    }
  }
  return PresentedMatrix(IndexSet::finite(m.rows()), m.rows(), std::move(e), {});
}

PresentedMatrix PresentedMatrix::toeplitz(IndexSet index, Diagonals diagonals) {
  return PresentedMatrix(index, 0, {}, std::move(diagonals));
}

PresentedMatrix PresentedMatrix::fit_nat(const DenseMatrix& window, std::size_t band) {
  const std::size_t k = window.rows();
  if (window.cols() != k || k < 2 * band + 1) throw std::invalid_argument("fit window too small for band");
  const std::size_t r = k - band - 1;
  Diagonals tail;
  for (Index d = -as_index(band); d <= as_index(band); ++d) {
    tail[d] = window(r, static_cast<std::size_t>(as_index(r) + d));
  }
  Entries head;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (std::min(i, j) < r && window(i, j) != 0) head[{as_index(i), as_index(j)}] = window(i, j);
    }
  }
  PresentedMatrix m(IndexSet::nat(), r, std::move(head), std::move(tail));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (m.entry(as_index(i), as_index(j)) != window(i, j)) {
        throw NotEventuallyAffine("window is not Toeplitz beyond row " + std::to_string(r));
      }
    }
  }
  return m;
}

std::size_t PresentedMatrix::band() const {
  std::size_t w = 0;
  for (const auto& [d, v] : diagonals_) w = std::max<std::size_t>(w, static_cast<std::size_t>(d < 0 ? -d : d));
  return w;
}

std::size_t PresentedMatrix::reach() const {
  Index r = 0;
  for (const auto& [ij, v] : head_) r = std::max({r, ij.first + 1, ij.second + 1});
  return static_cast<std::size_t>(r);
}

Integer PresentedMatrix::tail(Index d) const {
  auto it = diagonals_.find(d);
  return it == diagonals_.end() ? Integer(0) : it->second;
}

void PresentedMatrix::check_index(Index i) const {
  switch (index_.kind) {
    case IndexSet::Kind::Finite:
      if (i < 0 || i >= as_index(index_.n)) throw IndexError("index " + std::to_string(i) + " out of range");
      break;
    case IndexSet::Kind::Nat:
      if (i < 0) throw IndexError("negative index on nat-indexed matrix");
      break;
    case IndexSet::Kind::Int: break;
  }
}

Integer PresentedMatrix::entry(Index i, Index j) const {
  check_index(i);
  check_index(j);
  if (index_.kind == IndexSet::Kind::Int) return tail(j - i);
  if (index_.kind == IndexSet::Kind::Finite || std::min(i, j) < as_index(head_size_)) {
    auto it = head_.find({i, j});
    return it == head_.end() ? Integer(0) : it->second;
  }
  return tail(j - i);
}

PresentedMatrix PresentedMatrix::with_head_size(std::size_t k) const {
  if (index_.kind != IndexSet::Kind::Nat || k <= head_size_) return *this;
  PresentedMatrix out = *this;
  const Index limit = as_index(std::max(reach(), k + band() + 1));
  for (Index i = as_index(head_size_); i < as_index(k); ++i) {
    for (Index j = i; j < limit; ++j) {
      if (auto v = entry(i, j); v != 0) out.head_[{i, j}] = v;
      if (auto v = entry(j, i); v != 0) out.head_[{j, i}] = v;
    }
  }
  out.head_size_ = k;
  return out;
}

void PresentedMatrix::normalize() {
  if (index_.kind != IndexSet::Kind::Nat) return;
  const Index w = as_index(band());
  while (head_size_ > 0) {
    const Index k = as_index(head_size_) - 1;
    const Index limit = std::max(as_index(reach()), k + w + 1);
    bool matches = true;
    for (Index j = k; j < limit && matches; ++j) {
      auto row = head_.find({k, j});
      auto col = head_.find({j, k});
      Integer rv = row == head_.end() ? Integer(0) : row->second;
      Integer cv = col == head_.end() ? Integer(0) : col->second;
      matches = rv == tail(j - k) && cv == tail(k - j);
    }
    if (!matches) break;
    for (Index j = k; j < limit; ++j) {
      head_.erase({k, j});
      head_.erase({j, k});
    }
    --head_size_;
  }
}

PresentedMatrix operator*(const PresentedMatrix& a, const PresentedMatrix& b) {
  require_same_index(a, b);
  const IndexSet idx = a.index();
  if (idx.kind == IndexSet::Kind::Int) return PresentedMatrix::toeplitz(idx, convolve(a.diagonals(), b.diagonals()));
  if (idx.is_finite()) return PresentedMatrix::from_dense(truncate(a, idx.n) * truncate(b, idx.n));

  const std::size_t wa = a.band(), wb = b.band();
  const std::size_t n_out =
      std::max({a.reach(), b.reach(), a.head_size(), b.head_size()}) + std::max(wa, wb);
  const std::size_t region = n_out + wa + wb + 1;
  const std::size_t inner = region + wa + 1;
  const DenseMatrix ad = truncate(a, inner);
  const DenseMatrix bd = truncate(b, inner);
  PresentedMatrix::Entries head;
  for (std::size_t i = 0; i < region; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (ad(i, k) == 0) continue;
      for (std::size_t j = 0; j < region; ++j) {
        if (std::min(i, j) >= n_out || bd(k, j) == 0) continue;
        head[{as_index(i), as_index(j)}] += ad(i, k) * bd(k, j);
      }
    }
  }
  return PresentedMatrix(idx, n_out, std::move(head), convolve(a.diagonals(), b.diagonals()));
}

namespace {

PresentedMatrix combine(const PresentedMatrix& a, const PresentedMatrix& b, const Integer& sb) {
  require_same_index(a, b);
  PresentedMatrix::Diagonals diag = a.diagonals();
  for (const auto& [d, v] : b.diagonals()) diag[d] += sb * v;
  if (a.index().kind == IndexSet::Kind::Int) return PresentedMatrix::toeplitz(a.index(), std::move(diag));
  PresentedMatrix::Entries head;
  const std::size_t n_out = std::max(a.head_size(), b.head_size());
  const PresentedMatrix ah = a.with_head_size(n_out), bh = b.with_head_size(n_out);
  head = ah.head();
  for (const auto& [ij, v] : bh.head()) head[ij] += sb * v;
  return PresentedMatrix(a.index(), n_out, std::move(head), std::move(diag));
}

}  // namespace

PresentedMatrix operator+(const PresentedMatrix& a, const PresentedMatrix& b) { return combine(a, b, 1); }
PresentedMatrix operator-(const PresentedMatrix& a, const PresentedMatrix& b) { return combine(a, b, -1); }

PresentedMatrix scale(const PresentedMatrix& a, const Integer& c) {
  PresentedMatrix::Entries head = a.head();
  for (auto& [ij, v] : head) v *= c;
  PresentedMatrix::Diagonals diag = a.diagonals();
  for (auto& [d, v] : diag) v *= c;
  return PresentedMatrix(a.index(), a.head_size(), std::move(head), std::move(diag));
}

PresentedMatrix poly_eval(const UltrasphericalPoly& p, const PresentedMatrix& m) {
  const IndexSet idx = m.index();
  if (p.is_zero()) return PresentedMatrix::zero(idx);
  const auto& c = p.coeffs();
  const PresentedMatrix id = PresentedMatrix::identity(idx);
  PresentedMatrix acc = scale(id, c.back());
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    acc = acc * m;
    if (c[k] != 0) acc = acc + scale(id, c[k]);
  }
  return acc;
}

Index truncate_origin(const PresentedMatrix& m, std::size_t n) {
  return m.index().kind == IndexSet::Kind::Int ? -as_index(n / 2) : 0;
}

DenseMatrix truncate(const PresentedMatrix& m, std::size_t n) {
  if (m.index().is_finite()) n = std::min(n, m.index().n);
  DenseMatrix out(n, n);
  if (m.index().kind == IndexSet::Kind::Int) {
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [d, v] : m.diagonals()) {
        const Index j = as_index(i) + d;
        if (j >= 0 && j < as_index(n)) out(i, static_cast<std::size_t>(j)) = v;
      }
    }
    return out;
  }
  for (const auto& [ij, v] : m.head()) {
    if (ij.first < as_index(n) && ij.second < as_index(n)) {
      out(static_cast<std::size_t>(ij.first), static_cast<std::size_t>(ij.second)) = v;
    }
  }
  const Index nh = as_index(m.head_size());
  for (Index i = nh; i < as_index(n); ++i) {
    for (const auto& [d, v] : m.diagonals()) {
      const Index j = i + d;
      if (j >= nh && j < as_index(n)) out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
    }
  }
  return out;
}

PresentedMatrix transpose(const PresentedMatrix& m) {
  PresentedMatrix::Entries head;
  for (const auto& [ij, v] : m.head()) head[{ij.second, ij.first}] = v;
  PresentedMatrix::Diagonals diag;
  for (const auto& [d, v] : m.diagonals()) diag[-d] = v;
  return PresentedMatrix(m.index(), m.head_size(), std::move(head), std::move(diag));
}

bool is_symmetric(const PresentedMatrix& m) { return m == transpose(m); }

bool is_nonnegative(const PresentedMatrix& m) {
  for (const auto& [ij, v] : m.head()) {
    if (v < 0) return false;
  }
  for (const auto& [d, v] : m.diagonals()) {
    if (v < 0) return false;
  }
  return true;
}

PresentedVector::PresentedVector(IndexSet index, std::vector<Integer> head, Integer a, Integer b)
    : index_(index), head_(std::move(head)), a_(std::move(a)), b_(std::move(b)) {
  switch (index_.kind) {
    case IndexSet::Kind::Finite:
      if (head_.size() != index_.n) throw std::invalid_argument("finite vector length mismatch");
      if (a_ != 0 || b_ != 0) throw std::invalid_argument("finite vectors have no tail");
      break;
    case IndexSet::Kind::Int:
      if (!head_.empty() || a_ != 0) throw std::invalid_argument("int-indexed vectors are constant");
      break;
    case IndexSet::Kind::Nat: normalize(); break;
  }
}

PresentedVector PresentedVector::constant(IndexSet index, Integer c) {
  if (index.is_finite()) return PresentedVector(index, std::vector<Integer>(index.n, c), 0, 0);
  return PresentedVector(index, {}, 0, std::move(c));
}

void PresentedVector::normalize() {
  while (!head_.empty() && head_.back() == a_ * Integer(head_.size() - 1) + b_) head_.pop_back();
}

Integer PresentedVector::at(Index i) const {
  switch (index_.kind) {
    case IndexSet::Kind::Finite:
      if (i < 0 || i >= as_index(index_.n)) throw IndexError("vector index out of range");
      return head_[static_cast<std::size_t>(i)];
    case IndexSet::Kind::Int: return b_;
    case IndexSet::Kind::Nat:
      if (i < 0) throw IndexError("negative index on nat-indexed vector");
      if (i < as_index(head_.size())) return head_[static_cast<std::size_t>(i)];
      return a_ * i + b_;
  }
  return 0;
}

bool PresentedVector::is_zero() const {
  return a_ == 0 && b_ == 0 && std::all_of(head_.begin(), head_.end(), [](const Integer& x) { return x == 0; });
}

bool PresentedVector::is_positive() const {
  if (!std::all_of(head_.begin(), head_.end(), [](const Integer& x) { return x > 0; })) return false;
  switch (index_.kind) {
    case IndexSet::Kind::Finite: return true;
    case IndexSet::Kind::Int: return b_ > 0;
    case IndexSet::Kind::Nat: return a_ >= 0 && a_ * Integer(head_.size()) + b_ > 0;
  }
  return false;
}

std::vector<Integer> PresentedVector::window(Index from, std::size_t n) const {
  std::vector<Integer> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(at(from + as_index(k)));
  return out;
}

PresentedVector apply(const PresentedMatrix& m, const PresentedVector& v) {
  if (!(m.index() == v.index())) throw IncompatibleIndex("matrix and vector index sets differ");
  const IndexSet idx = m.index();
  Integer sum_t = 0, moment_t = 0;
  for (const auto& [d, t] : m.diagonals()) {
    sum_t += t;
    moment_t += t * d;
  }
  if (idx.kind == IndexSet::Kind::Int) return PresentedVector(idx, {}, 0, v.b() * sum_t);
  if (idx.is_finite()) {
    std::vector<Integer> out(idx.n);
    for (const auto& [ij, x] : m.head()) out[static_cast<std::size_t>(ij.first)] += x * v.at(ij.second);
    return PresentedVector(idx, std::move(out), 0, 0);
  }

  // Row i >= g sees only tail entries against the affine part of v, so
  // u_i = sum_d T(d) (a (i+d) + b) = (a S) i + (a D + b S).
  const Index w = as_index(m.band());
  const Index g = std::max({as_index(m.reach()), as_index(m.head_size()) + w, as_index(v.head().size()) + w});
  const Integer a_out = v.a() * sum_t;
  const Integer b_out = v.a() * moment_t + v.b() * sum_t;
  auto row_value = [&](Index i) {
    Integer s = 0;
    const Index jmax = std::max(as_index(m.reach()), i + w + 1);
    for (Index j = 0; j < jmax; ++j) {
      Integer e = m.entry(i, j);
      if (e != 0) s += e * v.at(j);
    }
    return s;
  };
  std::vector<Integer> head;
  for (Index i = 0; i < g; ++i) head.push_back(row_value(i));
  for (Index i = g; i <= g + w; ++i) {
    if (row_value(i) != a_out * i + b_out) {
      throw NotEventuallyAffine("generic row identity fails at row " + std::to_string(i));
    }
  }
  return PresentedVector(idx, std::move(head), a_out, b_out);
}

PresentedVector operator+(const PresentedVector& x, const PresentedVector& y) {
  if (!(x.index() == y.index())) throw IncompatibleIndex("vector index sets differ");
  const std::size_t n = std::max(x.head().size(), y.head().size());
  std::vector<Integer> head;
  if (x.index().is_finite()) {
    for (std::size_t i = 0; i < n; ++i) head.push_back(x.head()[i] + y.head()[i]);
    return PresentedVector(x.index(), std::move(head), 0, 0);
  }
  if (x.index().kind == IndexSet::Kind::Nat) {
    for (std::size_t i = 0; i < n; ++i) head.push_back(x.at(as_index(i)) + y.at(as_index(i)));
  }
  return PresentedVector(x.index(), std::move(head), x.a() + y.a(), x.b() + y.b());
}

PresentedVector scale(const PresentedVector& v, const Integer& c) {
  std::vector<Integer> head = v.head();
  for (auto& x : head) x *= c;
  return PresentedVector(v.index(), std::move(head), v.a() * c, v.b() * c);
}

std::string to_string(const PresentedVector& v) {
  std::ostringstream os;
  const auto& idx = v.index();
  if (idx.is_finite()) {
    os << '(';
    for (std::size_t i = 0; i < v.head().size(); ++i) os << (i ? ", " : "") << v.head()[i];
    os << ')';
    return os.str();
  }
  if (idx.kind == IndexSet::Kind::Int) {
    os << "(..., " << v.b() << ", " << v.b() << ", ...)";
    return os.str();
  }
  const std::size_t shown = std::max<std::size_t>(v.head().size() + 3, 5);
  os << '(';
  for (std::size_t i = 0; i < shown; ++i) os << (i ? ", " : "") << v.at(as_index(i));
  os << ", ...)";
  return os.str();
}

}  // namespace sl2cat
