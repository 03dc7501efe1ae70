#include "mccs/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace mccs {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::size_t product(const std::vector<std::int32_t>& extents) {
  std::size_t n = 1;
  for (auto e : extents) n *= static_cast<std::size_t>(e);
  return n;
}

GridMeta parse_grid_header(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
  }
  std::istringstream hs(line);
  std::string keyword;
  int d = 0;
  if (!(hs >> keyword) || keyword != "grid")
    throw InputError("grid file must start with 'grid <d> <n1> ... <nd>'");
  if (!(hs >> d) || d < 1 || d > 3)
    throw InputError("grid dimensionality must be 1, 2 or 3");
  GridMeta meta;
  for (int a = 0; a < d; ++a) {
    std::int64_t e = 0;
    if (!(hs >> e) || e < 1 || e > (1 << 24))
      throw InputError("malformed grid extent in header");
    meta.extents.push_back(static_cast<std::int32_t>(e));
  }
  std::string extra;
  if (hs >> extra) throw InputError("trailing tokens in grid header");
  return meta;
}

std::vector<double> parse_values(std::istream& in, std::size_t expected) {
  std::vector<double> values;
  values.reserve(expected);
  std::string token;
  while (in >> token) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw InputError("malformed value '" + token + "'");
    values.push_back(v);
  }
  if (values.size() != expected)
    throw InputError("expected " + std::to_string(expected) + " values, found " +
                     std::to_string(values.size()));
  return values;
}

NodeId parse_index(std::istringstream& ls, std::size_t n, const char* what) {
  std::int64_t i = -1;
  if (!(ls >> i) || i < 0 || static_cast<std::size_t>(i) >= n)
    throw InputError(std::string("bad node index in '") + what + "' line");
  return static_cast<NodeId>(i);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Instance parse_grid_probabilities(std::istream& in, double eps) {
  GridMeta meta = parse_grid_header(in);
  Instance inst;
  inst.probabilities = parse_values(in, product(meta.extents));
  for (double p : inst.probabilities)
    if (!(p >= 0.0 && p <= 1.0))
      throw InputError("probability outside [0, 1]: " + format_double(p));
  inst.graph = build_grid(meta.extents);
  inst.weights = probabilities_to_weights(inst.probabilities, eps);
  inst.root = select_root(inst.graph, inst.weights);
  return inst;
}

Instance read_grid_probabilities(const std::filesystem::path& path, double eps) {
  auto in = open_input(path);
  return parse_grid_probabilities(in, eps);
}

Instance parse_sparse_graph(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<double> w;
  std::vector<std::uint8_t> have_w;
  std::optional<NodeId> root;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    const std::string where = " (line " + std::to_string(line_no) + ")";
    if (key == "n") {
      std::int64_t count = 0;
      if (n || !(ls >> count) || count < 1)
        throw InputError("bad or repeated 'n' line" + where);
      n = static_cast<std::size_t>(count);
      w.assign(*n, 0.0);
      have_w.assign(*n, 0);
    } else if (!n) {
      throw InputError("'n <count>' must come first" + where);
    } else if (key == "w") {
      NodeId i = parse_index(ls, *n, "w");
      double v = 0.0;
      if (!(ls >> v) || !std::isfinite(v))
        throw InputError("bad weight" + where);
      if (have_w[i]) throw InputError("repeated weight" + where);
      w[i] = v;
      have_w[i] = 1;
    } else if (key == "e") {
      NodeId i = parse_index(ls, *n, "e");
      NodeId j = parse_index(ls, *n, "e");
      edges.emplace_back(i, j);
    } else if (key == "r") {
      root = parse_index(ls, *n, "r");
    } else {
      throw InputError("unknown line '" + key + "'" + where);
    }
    std::string extra;
    if (ls >> extra) throw InputError("trailing tokens" + where);
  }
  if (!n) throw InputError("missing 'n <count>' line");
  for (std::size_t i = 0; i < *n; ++i)
    if (!have_w[i]) throw InputError("missing weight for node " + std::to_string(i));

  Instance inst;
  inst.graph = build_sparse(*n, edges);
  inst.weights = std::move(w);
  inst.root = root ? *root : select_root(inst.graph, inst.weights);
  return inst;
}

Instance read_sparse_graph(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_sparse_graph(in);
}

FileFormat detect_format(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::string line, key;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    if (ls >> key) return key == "grid" ? FileFormat::Grid : FileFormat::Sparse;
  }
  throw InputError("empty instance file " + path.string());
}

Instance read_instance(const std::filesystem::path& path) {
  return detect_format(path) == FileFormat::Grid ? read_grid_probabilities(path)
                                                 : read_sparse_graph(path);
}

void write_grid_values(std::ostream& out, const GridMeta& grid,
                       const std::vector<double>& values) {
  out << "grid " << grid.extents.size();
  for (auto e : grid.extents) out << ' ' << e;
  out << '\n';
  const std::size_t row = static_cast<std::size_t>(grid.extents.back());
  for (std::size_t i = 0; i < values.size(); ++i)
    out << format_double(values[i]) << ((i + 1) % row == 0 ? '\n' : ' ');
}

void write_grid_mask(std::ostream& out, const GridMeta& grid,
                     const Assignment& x) {
  out << "grid " << grid.extents.size();
  for (auto e : grid.extents) out << ' ' << e;
  out << '\n';
  const std::size_t row = static_cast<std::size_t>(grid.extents.back());
  for (std::size_t i = 0; i < x.size(); ++i)
    out << (x[i] ? '1' : '0') << ((i + 1) % row == 0 ? '\n' : ' ');
}

void write_sparse_graph(std::ostream& out, const Graph& graph,
                        const NodeWeights& weights, std::optional<NodeId> root) {
  out << "n " << graph.size() << '\n';
  for (std::size_t i = 0; i < weights.size(); ++i)
    out << "w " << i << ' ' << format_double(weights[i]) << '\n';
  for (auto [i, j] : graph.edges()) out << "e " << i << ' ' << j << '\n';
  if (root) out << "r " << *root << '\n';
}

void write_node_list(std::ostream& out, const Assignment& x) {
  out << "n " << x.size() << '\n';
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) out << "v " << i << '\n';
}

Assignment parse_mask(std::istream& in) {
  std::string first;
  {
    std::streampos pos = in.tellg();
    if (!(in >> first)) throw InputError("empty mask");
    in.seekg(pos);
  }
  Assignment x;
  if (first == "grid") {
    GridMeta meta = parse_grid_header(in);
    for (double v : parse_values(in, product(meta.extents))) {
      if (v != 0.0 && v != 1.0) throw InputError("mask values must be 0 or 1");
      x.push_back(v == 1.0 ? 1 : 0);
    }
    return x;
  }
  std::string line;
  std::optional<std::size_t> n;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "n" && !n) {
      std::int64_t count = 0;
      if (!(ls >> count) || count < 0) throw InputError("bad 'n' line in mask");
      n = static_cast<std::size_t>(count);
      x.assign(*n, 0);
    } else if (key == "v" && n) {
      x[parse_index(ls, *n, "v")] = 1;
    } else {
      throw InputError("malformed node-list mask");
    }
  }
  if (!n) throw InputError("mask has neither a grid header nor an 'n' line");
  return x;
}

Assignment read_mask(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_mask(in);
}

void write_solution(std::ostream& out, const Instance& instance,
                    const Assignment& x) {
  if (instance.graph.grid())
    write_grid_mask(out, *instance.graph.grid(), x);
  else
    write_node_list(out, x);
}

std::vector<double> gen_random_probabilities(const RandomMapOptions& options) {
  const auto& ext = options.extents;
  if (ext.empty() || ext.size() > 3)
    throw InputError("grid dimensionality must be 1, 2 or 3");
  for (auto e : ext)
    if (e < 1) throw InputError("grid extent must be >= 1");
  if (options.smoothing_radius < 0)
    throw InputError("smoothing radius must be >= 0");

  const std::size_t n = product(ext);
  std::mt19937_64 rng(options.seed);
  std::vector<double> field(n);
  for (auto& v : field) v = static_cast<double>(rng() >> 11) * 0x1p-53;

  const std::size_t d = ext.size();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t a = d - 1; a > 0; --a) stride[a - 1] = stride[a] * ext[a];

  // separable 3-tap mean per axis, shrinking at the borders
  std::vector<double> tmp(n);
  for (int pass = 0; pass < options.smoothing_radius; ++pass) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::int64_t>((i / stride[a]) % ext[a]);
        double sum = field[i];
        int count = 1;
        if (c > 0) {
          sum += field[i - stride[a]];
          ++count;
        }
        if (c + 1 < ext[a]) {
          sum += field[i + stride[a]];
          ++count;
        }
        tmp[i] = sum / count;
      }
      field.swap(tmp);
    }
  }

  double mean = 0.0;
  for (double v : field) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : field) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(n));

  std::vector<double> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = sd > 0.0 ? (field[i] - mean) / sd : 0.0;
    p[i] = 1.0 / (1.0 + std::exp(-2.0 * (z - options.background_bias)));
    p[i] = std::clamp(p[i], 1e-12, 1.0 - 1e-12);
  }
  return p;
}

Instance gen_random(const RandomMapOptions& options, double eps) {
  Instance inst;
  inst.probabilities = gen_random_probabilities(options);
  inst.graph = build_grid(options.extents);
  inst.weights = probabilities_to_weights(inst.probabilities, eps);
  inst.root = select_root(inst.graph, inst.weights);
  return inst;
}

}  // namespace mccs
