#include "ccrlab/commutant.hpp"

#include <Eigen/SVD>
#include <functional>

namespace ccrlab {

namespace {

// Per sample x the two relations reduce, entry by entry, to equations
// coupling at most two entries of X (written on member cells p,q; a(q)
// abbreviates the permutation-liveness of V_x at source q):
//   (X V_x - V_x X)(p,q):  a(q) X(p, q+x) - a(p-x) X(p-x, q) = 0
//   (X V_x*- V_x* X)(p,q): a(q-x) X(p, q-x) - a(p) X(p+x, q) = 0
struct PairRow {
  long first = -1, second = -1;  // variable slots; -1 when the term is absent
};

}  // namespace

CommutantResult commutant_dim(const ShiftRep& rep, const std::vector<GridSteps>& samples,
                              long denseLimit) {
  const Grid& grid = rep.grid();
  const int k = rep.multiplicity();

  std::vector<long> memberCells;
  std::vector<long> slotOf(static_cast<size_t>(grid.cells()), -1);
  for (long p = 0; p < grid.cells(); ++p)
    if (rep.mask()[static_cast<size_t>(p)]) {
      slotOf[static_cast<size_t>(p)] = static_cast<long>(memberCells.size());
      memberCells.push_back(p);
    }
  const long n = static_cast<long>(memberCells.size()) * k;
  const long vars = n * n;

  auto entrySlot = [&](long cellRow, int chRow, long cellCol, int chCol) -> long {
    long i = slotOf[static_cast<size_t>(cellRow)] * k + chRow;
    long j = slotOf[static_cast<size_t>(cellCol)] * k + chCol;
    return i * n + j;
  };

  auto forward = [&](long cell, const GridSteps& x) -> long {
    // cell + x, or -1 when it leaves the window
    GridSteps minus = x;
    for (auto& v : minus.y) v = -v;
    for (auto& v : minus.u) v = -v;
    return grid.shifted(cell, minus);
  };

  std::vector<PairRow> rows;
  for (const GridSteps& x : samples) {
    for (long pc : memberCells)
      for (long qc : memberCells) {
        // relation with V_x
        {
          long qImg = forward(qc, x);                             // q + x
          long pSrc = grid.shifted(pc, x);                        // p - x
          bool firstOn = qImg >= 0 && rep.alive(qImg, x);         // q is a live source
          bool secondOn = pSrc >= 0 && rep.alive(pc, x);          // p is a live target
          if (firstOn || secondOn)
            for (int cr = 0; cr < k; ++cr)
              for (int cc = 0; cc < k; ++cc) {
                PairRow row;
                if (firstOn) row.first = entrySlot(pc, cr, qImg, cc);
                if (secondOn) row.second = entrySlot(pSrc, cr, qc, cc);
                rows.push_back(row);
              }
        }
        // relation with V_x*
        {
          long qSrc = grid.shifted(qc, x);                        // q - x
          long pImg = forward(pc, x);                             // p + x
          bool firstOn = qSrc >= 0 && rep.alive(qc, x);           // q is a live target
          bool secondOn = pImg >= 0 && rep.alive(pImg, x);        // p is a live source
          if (firstOn || secondOn)
            for (int cr = 0; cr < k; ++cr)
              for (int cc = 0; cc < k; ++cc) {
                PairRow row;
                if (firstOn) row.first = entrySlot(pc, cr, qSrc, cc);
                if (secondOn) row.second = entrySlot(pImg, cr, qc, cc);
                rows.push_back(row);
              }
        }
      }
  }

  CommutantResult result{};
  result.variables = vars;
  if (vars == 0) {
    result.dim = 0;
    result.method = "empty";
    return result;
  }

  if (vars > denseLimit) {
    // Every row is X[a] = X[b] or X[a] = 0: the nullspace is spanned by the
    // indicator vectors of the merge classes not pinned to zero. Union-find
    // performs this elimination exactly.
    std::vector<long> parent(static_cast<size_t>(vars + 1));
    for (long i = 0; i <= vars; ++i) parent[static_cast<size_t>(i)] = i;
    const long zero = vars;
    std::function<long(long)> find = [&](long v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    auto unite = [&](long a, long b) { parent[static_cast<size_t>(find(a))] = find(b); };
    std::vector<std::uint8_t> touched(static_cast<size_t>(vars), 0);
    for (const PairRow& row : rows) {
      if (row.first >= 0) touched[static_cast<size_t>(row.first)] = 1;
      if (row.second >= 0) touched[static_cast<size_t>(row.second)] = 1;
      if (row.first >= 0 && row.second >= 0)
        unite(row.first, row.second);
      else if (row.first >= 0)
        unite(row.first, zero);
      else if (row.second >= 0)
        unite(row.second, zero);
    }
    std::vector<std::uint8_t> seen(static_cast<size_t>(vars + 1), 0);
    long zeroRoot = find(zero);
    int classes = 0;
    for (long v = 0; v < vars; ++v) {
      long root = find(v);
      if (root == zeroRoot || seen[static_cast<size_t>(root)]) continue;
      seen[static_cast<size_t>(root)] = 1;
      ++classes;
    }
    result.dim = classes;
    result.method = "union-find";
    return result;
  }

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(std::max<long>(1, static_cast<long>(rows.size())), vars);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].first >= 0) m(static_cast<long>(r), rows[r].first) += 1.0;
    if (rows[r].second >= 0) m(static_cast<long>(r), rows[r].second) -= 1.0;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  const auto& sigma = svd.singularValues();
  double cutoff = sigma.size() > 0 ? 1e-9 * sigma[0] : 0.0;
  int rank = 0;
  for (Eigen::Index s = 0; s < sigma.size(); ++s)
    if (sigma[s] > cutoff) ++rank;
  result.dim = static_cast<int>(vars - rank);
  result.method = "svd";
  return result;
}

}  // namespace ccrlab
