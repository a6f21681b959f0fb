#include "ccrlab/cocycle.hpp"

#include <Eigen/SVD>
#include <map>

namespace ccrlab {

Eigen::VectorXcd cocycle_vector(const ShiftRep& rep, const AdditiveCocycle& c,
                                const GridSteps& x) {
  const int k = rep.multiplicity();
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(rep.dimension());
  for (long p = 0; p < rep.cells(); ++p) {
    if (!rep.difference_indicator(p, x)) continue;
    for (int ch = 0; ch < k; ++ch) v[p * k + ch] = c.coefficient[ch];
  }
  return v;
}

double cocycle_residual(const ShiftRep& rep, const AdditiveCocycle& c, const GridSteps& x,
                        const GridSteps& y) {
  const Grid& grid = rep.grid();
  GridSteps xy = x + y;
  double residual = 0;
  for (long p = 0; p < grid.cells(); ++p) {
    if (grid.shifted(p, xy) < 0) continue;  // outside the safe region of x+y
    int direct = rep.difference_indicator(p, xy) ? 1 : 0;
    int first = rep.difference_indicator(p, x) ? 1 : 0;
    int shiftedSecond = 0;
    long src = grid.shifted(p, x);
    if (src >= 0 && rep.difference_indicator(src, y)) shiftedSecond = 1;
    int indicator = direct - first - shiftedSecond;
    for (int ch = 0; ch < rep.multiplicity(); ++ch) {
      Complex term = Complex(indicator, 0) * c.coefficient[ch];
      residual = std::max(residual, std::abs(term));
    }
  }
  return residual;
}

namespace {

struct WindowSystem {
  // variable layout: (generator j, cell p in D_j, channel ch)
  std::vector<std::map<long, long>> supportIndex;  // per generator: cell -> slot
  long cellVars = 0;                               // slots before channel expansion
  Eigen::MatrixXd nullspace;                       // orthonormal columns, channel layout
  int nullity = 0;
};

WindowSystem solve_window(const PSpace& a, int k, const std::vector<GridSteps>& gens,
                          const Grid& grid) {
  const size_t g = gens.size();
  ShiftRep rep(a, grid, 1);  // cell structure only; channels are appended below

  WindowSystem sys;
  sys.supportIndex.resize(g);
  for (size_t j = 0; j < g; ++j) {
    for (long p = 0; p < grid.cells(); ++p)
      if (rep.difference_indicator(p, gens[j])) sys.supportIndex[j][p] = sys.cellVars++;
  }

  // compatibility rows: xi_i(p) + (V_i xi_j)(p) = xi_j(p) + (V_j xi_i)(p)
  struct Row {
    std::vector<std::pair<long, double>> terms;
  };
  std::vector<Row> rows;
  for (size_t i = 0; i < g; ++i)
    for (size_t j = i + 1; j < g; ++j) {
      GridSteps joint = gens[i] + gens[j];
      for (long p = 0; p < grid.cells(); ++p) {
        if (grid.shifted(p, gens[i]) < 0 || grid.shifted(p, gens[j]) < 0 ||
            grid.shifted(p, joint) < 0)
          continue;
        Row row;
        auto add = [&](size_t gen, long cell, double coeff) {
          auto it = sys.supportIndex[gen].find(cell);
          if (it != sys.supportIndex[gen].end()) row.terms.emplace_back(it->second, coeff);
        };
        add(i, p, 1.0);
        add(j, grid.shifted(p, gens[i]), 1.0);  // support in D_j implies the shift survives
        add(j, p, -1.0);
        add(i, grid.shifted(p, gens[j]), -1.0);
        if (!row.terms.empty()) rows.push_back(std::move(row));
      }
    }

  const long vars = sys.cellVars * k;
  if (vars == 0) {
    sys.nullity = 0;
    sys.nullspace.resize(0, 0);
    return sys;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(std::max<long>(1, static_cast<long>(rows.size()) * k), vars);
  long r = 0;
  for (const Row& row : rows)
    for (int ch = 0; ch < k; ++ch, ++r)
      for (const auto& [slot, coeff] : row.terms) m(r, slot * k + ch) += coeff;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  double cutoff = sigma.size() > 0 ? 1e-9 * sigma[0] : 0.0;
  int rank = 0;
  for (Eigen::Index s = 0; s < sigma.size(); ++s)
    if (sigma[s] > cutoff) ++rank;
  sys.nullity = static_cast<int>(vars) - rank;
  sys.nullspace = svd.matrixV().rightCols(sys.nullity);
  return sys;
}

}  // namespace

CocycleDimResult cocycle_space_dim(const PSpace& a, int multiplicity,
                                   const std::vector<GridSteps>& generators,
                                   const std::vector<Grid>& ladder) {
  require(generators.size() >= 2, ErrorCode::BadInput, "need at least 2 generators");
  require(ladder.size() >= 3, ErrorCode::LadderTooShort, "need a ladder of at least 3 windows");
  for (size_t i = 1; i < ladder.size(); ++i) {
    require(ladder[i].window().yLo == ladder[i - 1].window().yLo &&
                ladder[i].window().h == ladder[i - 1].window().h &&
                ladder[i].window().M == ladder[i - 1].window().M,
            ErrorCode::BadInput, "ladder windows must be nested (same origin, step, M)");
    require(ladder[i].extent() > ladder[i - 1].extent(), ErrorCode::LadderTooShort,
            "ladder extents must strictly increase");
  }

  CocycleDimResult result{};
  std::vector<WindowSystem> systems;
  for (const Grid& grid : ladder) {
    systems.push_back(solve_window(a, multiplicity, generators, grid));
    result.windowDims.push_back(systems.back().nullity);
  }

  for (size_t i = 1; i < systems.size(); ++i)
    if (systems[i].nullity != systems[0].nullity) {
      result.stable = false;
      result.note = "nullspace dimension varies across the window ladder";
      return result;
    }

  int raw = systems.back().nullity;
  if (raw == 0) {
    result.stable = true;
    result.dim = 0;
    return result;
  }

  // Growth filter: restrict the largest-window nullspace to the variables of
  // the smallest window. A genuine (L^2) cocycle keeps nearly all of its norm
  // there; window artifacts spread and lose it.
  const WindowSystem& big = systems.back();
  const Grid& smallGrid = ladder.front();
  const Grid& bigGrid = ladder.back();
  const int k = multiplicity;

  std::vector<long> rowsKept;
  for (size_t j = 0; j < generators.size(); ++j)
    for (const auto& [cell, slot] : big.supportIndex[j]) {
      auto coords = bigGrid.decode(cell);
      bool inside = true;
      for (int axis = 0; axis < smallGrid.freeRank(); ++axis)
        if (coords[static_cast<size_t>(axis)] >= smallGrid.ySize()[static_cast<size_t>(axis)])
          inside = false;
      if (!inside) continue;
      for (int ch = 0; ch < k; ++ch) rowsKept.push_back(slot * k + ch);
    }

  Eigen::MatrixXd restricted(static_cast<long>(rowsKept.size()), big.nullspace.cols());
  for (size_t r = 0; r < rowsKept.size(); ++r)
    restricted.row(static_cast<long>(r)) = big.nullspace.row(rowsKept[r]);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(restricted);
  int bounded = 0;
  for (Eigen::Index s = 0; s < svd.singularValues().size(); ++s) {
    result.restrictionSingularValues.push_back(svd.singularValues()[s]);
    if (svd.singularValues()[s] >= 0.5) ++bounded;
  }
  result.stable = true;
  result.dim = bounded;
  if (bounded < raw)
    result.note = "window-artifact directions removed by the norm-growth filter";
  return result;
}

}  // namespace ccrlab
