#include "jw/exactla/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace jw::exactla {
namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a->same_as(*b)) {
    throw Error(ErrorKind::DescriptorMismatch, "matrices over different fields");
  }
}

std::size_t leading_index(std::span<const Elem> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].code != 0) return i;
  }
  return v.size();
}

bool use_sparse_path(std::size_t rows, std::size_t cols, std::size_t nnz) {
  if (cols <= kSparseMinCols || rows == 0) return false;
  const double density = static_cast<double>(nnz) / (static_cast<double>(rows) * cols);
  return density < kSparseMaxDensity;
}

/// Kernel vectors read off an RREF matrix (first `cols` columns), before echelonizing.
std::vector<Vec> raw_kernel(const Matrix& r, const std::vector<std::size_t>& pivots,
                            std::size_t cols) {
  const auto& f = *r.field();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

/// Splits the columns into connected blocks (two columns connect when some row
/// uses both); the system is block diagonal in this partition.
struct BlockSplit {
  std::vector<std::vector<std::uint32_t>> block_cols;  // ascending global columns
  std::vector<std::vector<std::size_t>> block_rows;
  std::vector<std::uint32_t> unused_cols;
};

BlockSplit split_blocks(const SparseMatrix& m) {
  DisjointSets ds(m.cols());
  std::vector<bool> used(m.cols(), false);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    for (const auto& [c, v] : row) {
      used[c] = true;
      ds.unite(row.front().first, c);
    }
  }
  BlockSplit out;
  std::vector<std::size_t> block_of_root(m.cols(), SIZE_MAX);
  for (std::uint32_t c = 0; c < m.cols(); ++c) {
    if (!used[c]) {
      out.unused_cols.push_back(c);
      continue;
    }
    const auto root = ds.find(c);
    if (block_of_root[root] == SIZE_MAX) {
      block_of_root[root] = out.block_cols.size();
      out.block_cols.emplace_back();
      out.block_rows.emplace_back();
    }
    out.block_cols[block_of_root[root]].push_back(c);
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    out.block_rows[block_of_root[ds.find(row.front().first)]].push_back(r);
  }
  return out;
}

Matrix block_matrix(const SparseMatrix& m, const std::vector<std::uint32_t>& cols,
                    const std::vector<std::size_t>& rows) {
  Matrix local(m.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : m.row(rows[i])) {
      const auto it = std::lower_bound(cols.begin(), cols.end(), c);
      local(i, static_cast<std::size_t>(it - cols.begin())) = v;
    }
  }
  return local;
}

}  // namespace

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::size_t Matrix::nonzeros() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](Elem e) { return e.code != 0; }));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
  const auto& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a.code == 0) continue;
      const auto brow = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (brow[j].code != 0) orow[j] = f.add(orow[j], f.mul(a, brow[j]));
      }
    }
  }
  return out;
}

Vec Matrix::operator*(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shapes");
  const auto& f = *field_;
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Elem acc{};
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (r[j].code != 0 && v[j].code != 0) acc = f.add(acc, f.mul(r[j], v[j]));
    }
    out[i] = acc;
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(ErrorKind::DimensionMismatch, "matrix sum shapes");
  }
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], rhs.data_[i]);
  return out;
}

Matrix Matrix::scaled(Elem s) const {
  Matrix out(*this);
  for (auto& e : out.data_) e = field_->mul(e, s);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require_same_field(field_, below.field_);
  if (cols_ != below.cols_) throw Error(ErrorKind::DimensionMismatch, "vstack column counts");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

void SparseMatrix::add_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& [c, v] : entries) {
    if (c >= cols_) throw Error(ErrorKind::DimensionMismatch, "sparse entry column out of range");
    if (!merged.empty() && merged.back().first == c) {
      merged.back().second = field_->add(merged.back().second, v);
    } else {
      merged.emplace_back(c, v);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.code == 0; });
  rows_.push_back(std::move(merged));
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) m(r, c) = v;
  }
  return m;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Entry> entries;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c].code != 0) entries.emplace_back(static_cast<std::uint32_t>(c), row[c]);
    }
    s.rows_.push_back(std::move(entries));
  }
  return s;
}

SubspaceBasis SubspaceBasis::from_echelon(FieldPtr field, std::size_t ambient,
                                          std::vector<Vec> rows) {
  SubspaceBasis b(std::move(field), ambient);
  for (auto& r : rows) {
    if (r.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "basis vector length");
    const auto lead = leading_index(r);
    if (lead == ambient || (!b.pivots_.empty() && lead <= b.pivots_.back())) {
      throw Error(ErrorKind::BadParam, "rows are not in echelon form");
    }
    b.pivots_.push_back(lead);
    b.rows_.push_back(std::move(r));
  }
  return b;
}

std::optional<Vec> SubspaceBasis::coordinates(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length");
  const auto& f = *field_;
  Vec w(v.begin(), v.end());
  Vec coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c.code == 0) continue;
    coords[i] = c;
    const auto& r = rows_[i];
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (r[j].code != 0) w[j] = f.sub(w[j], f.mul(c, r[j]));
    }
  }
  if (leading_index(w) != ambient_) return std::nullopt;
  return coords;
}

bool SubspaceBasis::contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const Vec& v) { return contains(v); });
}

std::vector<std::size_t> rref(Matrix& m) {
  const auto& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c).code == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
    auto prow = m.row(r);
    const Elem inv = f.inv(prow[c]);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (prow[j].code != 0) {
        prow[j] = f.mul(prow[j], inv);
        nz.push_back(j);
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto irow = m.row(i);
      const Elem factor = irow[c];
      if (factor.code == 0) continue;
      for (auto j : nz) irow[j] = f.sub(irow[j], f.mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  if (use_sparse_path(m.rows(), m.cols(), m.nonzeros())) return rank(SparseMatrix::from_dense(m));
  Matrix copy(m);
  return rref(copy).size();
}

std::size_t rank(const SparseMatrix& m) {
  if (!use_sparse_path(m.rows(), m.cols(), m.nonzeros())) {
    Matrix dense = m.to_dense();
    return rref(dense).size();
  }
  const auto split = split_blocks(m);
  std::size_t total = 0;
  for (std::size_t b = 0; b < split.block_cols.size(); ++b) {
    Matrix local = block_matrix(m, split.block_cols[b], split.block_rows[b]);
    total += rref(local).size();
  }
  return total;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  const auto& f = *m.field();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = f.one();
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(aug.row(i).begin() + n, aug.row(i).end(), inv.row(i).begin());
  }
  return inv;
}

SubspaceBasis kernel_dense(const Matrix& m) {
  Matrix r(m);
  const auto pivots = rref(r);
  const auto raw = raw_kernel(r, pivots, m.cols());
  return span_of(m.field(), m.cols(), raw);
}

SubspaceBasis kernel_sparse(const SparseMatrix& m) {
  const auto& f = *m.field();
  const auto split = split_blocks(m);
  std::vector<Vec> vectors;
  for (auto c : split.unused_cols) {
    Vec v(m.cols());
    v[c] = f.one();
    vectors.push_back(std::move(v));
  }
  for (std::size_t b = 0; b < split.block_cols.size(); ++b) {
    const auto& cols = split.block_cols[b];
    const auto local = kernel_dense(block_matrix(m, cols, split.block_rows[b]));
    for (const auto& lv : local.vectors()) {
      Vec v(m.cols());
      for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = lv[j];
      vectors.push_back(std::move(v));
    }
  }
  // Blocks have disjoint supports, so ordering by leading column yields the RREF.
  std::sort(vectors.begin(), vectors.end(),
            [](const Vec& a, const Vec& b) { return leading_index(a) < leading_index(b); });
  return SubspaceBasis::from_echelon(m.field(), m.cols(), std::move(vectors));
}

SubspaceBasis kernel(const Matrix& m) {
  if (use_sparse_path(m.rows(), m.cols(), m.nonzeros())) {
    return kernel_sparse(SparseMatrix::from_dense(m));
  }
  return kernel_dense(m);
}

SubspaceBasis kernel(const SparseMatrix& m) {
  if (use_sparse_path(m.rows(), m.cols(), m.nonzeros())) return kernel_sparse(m);
  return kernel_dense(m.to_dense());
}

std::optional<Solution> solve(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
  const std::size_t cols = m.cols();
  Matrix aug(m.field(), m.rows(), cols + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, cols) = b[i];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vec particular(cols);
  for (std::size_t i = 0; i < pivots.size(); ++i) particular[pivots[i]] = aug(i, cols);
  auto raw = raw_kernel(aug, pivots, cols);
  return Solution{std::move(particular), span_of(m.field(), cols, raw)};
}

SubspaceBasis span_of(const FieldPtr& field, std::size_t ambient, std::span<const Vec> vectors) {
  Matrix m(field, vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) {
      throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    }
    std::copy(vectors[i].begin(), vectors[i].end(), m.row(i).begin());
  }
  const auto pivots = rref(m);
  std::vector<Vec> rows;
  rows.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return SubspaceBasis::from_echelon(field, ambient, std::move(rows));
}

SubspaceBasis sum(const SubspaceBasis& u, const SubspaceBasis& v) {
  require_same_field(u.field(), v.field());
  if (u.ambient() != v.ambient()) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions");
  std::vector<Vec> all(u.vectors());
  all.insert(all.end(), v.vectors().begin(), v.vectors().end());
  return span_of(u.field(), u.ambient(), all);
}

SubspaceBasis intersect(const SubspaceBasis& u, const SubspaceBasis& v) {
  require_same_field(u.field(), v.field());
  if (u.ambient() != v.ambient()) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions");
  const auto& f = *u.field();
  const std::size_t k = u.dim(), l = v.dim(), n = u.ambient();
  if (k == 0 || l == 0) return SubspaceBasis(u.field(), n);
  // columns u_1..u_k, v_1..v_l; a kernel vector (a, b) gives sum a_i u_i in U ∩ V
  Matrix m(u.field(), n, k + l);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, j) = u.vectors()[j][i];
  }
  for (std::size_t j = 0; j < l; ++j) {
    for (std::size_t i = 0; i < n; ++i) m(i, k + j) = v.vectors()[j][i];
  }
  const auto ker = kernel_dense(m);
  std::vector<Vec> common;
  for (const auto& w : ker.vectors()) {
    Vec x(n);
    for (std::size_t j = 0; j < k; ++j) {
      if (w[j].code == 0) continue;
      const auto& uj = u.vectors()[j];
      for (std::size_t i = 0; i < n; ++i) x[i] = f.add(x[i], f.mul(w[j], uj[i]));
    }
    common.push_back(std::move(x));
  }
  return span_of(u.field(), n, common);
}

bool subspace_equal(const SubspaceBasis& u, const SubspaceBasis& v) { return u == v; }

}  // namespace jw::exactla
