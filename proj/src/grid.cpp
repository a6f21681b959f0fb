#include "ccrlab/grid.hpp"

#include <cstdio>
#include <cstring>
#include <thread>

namespace ccrlab {

bool operator==(const GridSteps& a, const GridSteps& b) { return a.y == b.y && a.u == b.u; }

GridSteps operator+(const GridSteps& a, const GridSteps& b) {
  GridSteps s = a;
  for (size_t i = 0; i < s.y.size(); ++i) s.y[i] += b.y[i];
  for (size_t i = 0; i < s.u.size(); ++i) s.u[i] += b.u[i];
  return s;
}

Grid::Grid(QuotientChart chart, GridWindow window)
    : chart_(std::move(chart)), window_(std::move(window)) {
  const int f = chart_.freeRank();
  require(window_.yLo.size() == f && window_.yHi.size() == f, ErrorCode::WindowChartMismatch,
          "window free-axis count does not match chart");
  require(window_.h > 0, ErrorCode::BadInput, "grid step must be positive");
  if (chart_.torusRank() > 0)
    require(window_.M >= 2, ErrorCode::BadInput, "need at least 2 torus subdivisions");

  ySize_.resize(static_cast<size_t>(f));
  cellCount_ = 1;
  for (int a = 0; a < f; ++a) {
    Rat extent = window_.yHi[a] - window_.yLo[a];
    require(extent >= 4 * window_.h, ErrorCode::BadInput, "window must span at least 4 steps");
    Int n = rat_floor(extent / window_.h);
    ySize_[static_cast<size_t>(a)] = n.get_si() + 1;
    cellCount_ *= ySize_[static_cast<size_t>(a)];
  }
  for (int a = 0; a < chart_.torusRank(); ++a) cellCount_ *= window_.M;

  double vol = to_double(chart_.jacobian());
  for (int a = 0; a < f; ++a) vol *= to_double(window_.h);
  for (int a = 0; a < chart_.torusRank(); ++a) vol /= window_.M;
  cellVolume_ = vol;
}

std::vector<long> Grid::decode(long index) const {
  const int f = freeRank(), r = torusRank();
  std::vector<long> coords(static_cast<size_t>(f + r));
  for (int a = f + r - 1; a >= 0; --a) {
    long size = a < f ? ySize_[static_cast<size_t>(a)] : window_.M;
    coords[static_cast<size_t>(a)] = index % size;
    index /= size;
  }
  return coords;
}

long Grid::encode(const std::vector<long>& coords) const {
  const int f = freeRank(), r = torusRank();
  long index = 0;
  for (int a = 0; a < f + r; ++a) {
    long size = a < f ? ySize_[static_cast<size_t>(a)] : window_.M;
    index = index * size + coords[static_cast<size_t>(a)];
  }
  return index;
}

RatVec Grid::cell_point(long index) const {
  auto coords = decode(index);
  const int f = freeRank(), r = torusRank();
  RatVec y(f), u(r);
  for (int a = 0; a < f; ++a) y[a] = window_.yLo[a] + window_.h * Rat(coords[static_cast<size_t>(a)]);
  for (int a = 0; a < r; ++a) u[a] = frac(coords[static_cast<size_t>(f + a)], window_.M);
  return chart_.point(y, u);
}

RatVec Grid::step_vector(const GridSteps& s) const {
  const int f = freeRank(), r = torusRank();
  require(static_cast<int>(s.y.size()) == f && static_cast<int>(s.u.size()) == r,
          ErrorCode::BadInput, "step size mismatch");
  RatVec y(f), u(r);
  for (int a = 0; a < f; ++a) y[a] = window_.h * Rat(s.y[static_cast<size_t>(a)]);
  for (int a = 0; a < r; ++a) u[a] = frac(s.u[static_cast<size_t>(a)], window_.M);
  return chart_.point(y, u);
}

long Grid::shifted(long index, const GridSteps& s) const {
  auto coords = decode(index);
  const int f = freeRank(), r = torusRank();
  for (int a = 0; a < f; ++a) {
    coords[static_cast<size_t>(a)] -= s.y[static_cast<size_t>(a)];
    if (coords[static_cast<size_t>(a)] < 0 || coords[static_cast<size_t>(a)] >= ySize_[static_cast<size_t>(a)])
      return -1;
  }
  for (int a = 0; a < r; ++a) {
    long c = (coords[static_cast<size_t>(f + a)] - s.u[static_cast<size_t>(a)]) % window_.M;
    if (c < 0) c += window_.M;
    coords[static_cast<size_t>(f + a)] = c;
  }
  return encode(coords);
}

GridSteps Grid::snap(const RatVec& x) const {
  auto c = chart_.coords(x);
  GridSteps s;
  s.y.resize(static_cast<size_t>(freeRank()));
  s.u.resize(static_cast<size_t>(torusRank()));
  for (int a = 0; a < freeRank(); ++a) {
    Rat q = c.y[a] / window_.h;
    require(is_integer(q), ErrorCode::SampleOffGrid, "free coordinate is not a multiple of h");
    s.y[static_cast<size_t>(a)] = Rat(q).get_num().get_si();
  }
  for (int a = 0; a < torusRank(); ++a) {
    Rat q = c.u[a] * window_.M;
    require(is_integer(q), ErrorCode::SampleOffGrid, "torus coordinate is not a multiple of 1/M");
    s.u[static_cast<size_t>(a)] = Rat(q).get_num().get_si();
  }
  return s;
}

double Grid::extent() const {
  double e = 0;
  for (int a = 0; a < freeRank(); ++a)
    e = std::max(e, to_double(Rat(window_.yHi[a] - window_.yLo[a])));
  return e;
}

MemberMask build_mask(const PSpace& a, const Grid& grid, int threads) {
  MemberMask mask(static_cast<size_t>(grid.cells()));
  auto work = [&](long begin, long end) {
    for (long i = begin; i < end; ++i)
      mask[static_cast<size_t>(i)] = a.member(grid.cell_point(i)) ? 1 : 0;
  };
  if (threads <= 1 || grid.cells() < 256) {
    work(0, grid.cells());
    return mask;
  }
  std::vector<std::thread> pool;
  long chunk = (grid.cells() + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long begin = t * chunk;
    long end = std::min(grid.cells(), begin + chunk);
    if (begin < end) pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return mask;
}

bool member_shifted(const PSpace& a, const Grid& grid, const MemberMask& mask, long index,
                    const GridSteps& s) {
  long src = grid.shifted(index, s);
  if (src >= 0) return mask[static_cast<size_t>(src)] != 0;
  return a.member(RatVec(grid.cell_point(index) - grid.step_vector(s)));
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

struct Reader {
  const std::string& data;
  size_t pos = 0;
  bool ok = true;

  std::uint32_t u32() {
    if (pos + 4 > data.size()) {
      ok = false;
      return 0;
    }
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[pos + static_cast<size_t>(i)])) << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    if (pos + 8 > data.size()) {
      ok = false;
      return 0;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[pos + static_cast<size_t>(i)])) << (8 * i);
    pos += 8;
    return v;
  }
  double f64() {
    std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
};

constexpr char kMagic[] = "CCRLAB1";

}  // namespace

void write_mask_cache(const std::string& path, const Grid& grid, const MemberMask& mask) {
  std::string out(kMagic, 7);
  put_u32(out, static_cast<std::uint32_t>(grid.chart().dim()));
  put_u32(out, static_cast<std::uint32_t>(grid.torusRank()));
  put_u32(out, static_cast<std::uint32_t>(grid.window().M));
  put_f64(out, to_double(grid.window().h));
  for (int a = 0; a < grid.freeRank(); ++a) {
    put_f64(out, to_double(grid.window().yLo[a]));
    put_f64(out, to_double(grid.window().yHi[a]));
  }
  put_u64(out, static_cast<std::uint64_t>(grid.cells()));
  std::string bits((static_cast<size_t>(grid.cells()) + 7) / 8, '\0');
  for (long i = 0; i < grid.cells(); ++i)
    if (mask[static_cast<size_t>(i)])
      bits[static_cast<size_t>(i) / 8] |= static_cast<char>(1 << (i % 8));
  out += bits;

  std::FILE* f = std::fopen(path.c_str(), "wb");
  require(f != nullptr, ErrorCode::BadInput, "cannot open cache file for writing: " + path);
  std::fwrite(out.data(), 1, out.size(), f);
  std::fclose(f);
}

bool read_mask_cache(const std::string& path, const Grid& grid, MemberMask& mask) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  std::string data;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) data.append(buf, n);
  std::fclose(f);

  if (data.size() < 7 || std::memcmp(data.data(), kMagic, 7) != 0) return false;
  Reader r{data, 7};
  if (r.u32() != static_cast<std::uint32_t>(grid.chart().dim())) return false;
  if (r.u32() != static_cast<std::uint32_t>(grid.torusRank())) return false;
  if (r.u32() != static_cast<std::uint32_t>(grid.window().M)) return false;
  if (r.f64() != to_double(grid.window().h)) return false;
  for (int a = 0; a < grid.freeRank(); ++a) {
    if (r.f64() != to_double(grid.window().yLo[a])) return false;
    if (r.f64() != to_double(grid.window().yHi[a])) return false;
  }
  if (r.u64() != static_cast<std::uint64_t>(grid.cells())) return false;
  if (!r.ok) return false;
  size_t need = (static_cast<size_t>(grid.cells()) + 7) / 8;
  if (data.size() - r.pos < need) return false;
  mask.assign(static_cast<size_t>(grid.cells()), 0);
  for (long i = 0; i < grid.cells(); ++i)
    mask[static_cast<size_t>(i)] =
        (data[r.pos + static_cast<size_t>(i) / 8] >> (i % 8)) & 1;
  return true;
}

}  // namespace ccrlab
