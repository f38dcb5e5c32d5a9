// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/diagrams.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

#include "gosset/error.hpp"

namespace gosset {

namespace {

Error malformed(const std::string& what) { return Error(ErrorCode::MalformedSpec, what); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<Edge> chain(int n, EdgeLabel last = {}) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, i + 2 == n ? last : EdgeLabel{}});
  return e;
}

EdgeLabel parse_label(std::string_view s) {
  auto parts = split(s, '/');
  if (parts.size() > 2) throw malformed("bad edge label '" + std::string(s) + "'");
  auto p = parse_int(parts[0]);
  auto q = parts.size() == 2 ? parse_int(parts[1]) : std::optional<int>(1);
  if (!p || !q) throw malformed("bad edge label '" + std::string(s) + "'");
  return {*p, *q};
}

CoxeterDiagram parse_edge_list(std::string_view spec) {
  std::optional<int> rank;
  std::optional<std::string_view> edge_text;
  for (auto field : split(spec, ';')) {
    field = trim(field);
    if (field.empty()) continue;
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw malformed("expected key=value in '" + std::string(field) + "'");
    auto key = trim(field.substr(0, eq));
    auto value = trim(field.substr(eq + 1));
    if (key == "rank") {
      rank = parse_int(value);
      if (!rank || *rank < 1) throw malformed("rank must be a positive integer");
    } else if (key == "edges") {
      edge_text = value;
    } else {
      throw malformed("unknown key '" + std::string(key) + "'");
    }
  }
  if (!rank) throw malformed("missing rank=");
  std::vector<Edge> edges;
  if (edge_text && !edge_text->empty()) {
    for (auto item : split(*edge_text, ',')) {
      item = trim(item);
      auto colon = item.find(':');
      auto pair = item.substr(0, colon);
      auto dash = pair.find('-');
      if (dash == std::string_view::npos) throw malformed("edge '" + std::string(item) + "' needs i-j");
      auto i = parse_int(pair.substr(0, dash));
      auto j = parse_int(pair.substr(dash + 1));
      if (!i || !j) throw malformed("edge '" + std::string(item) + "' has bad node indices");
      EdgeLabel m = colon == std::string_view::npos ? EdgeLabel{} : parse_label(item.substr(colon + 1));
      edges.push_back({std::min(*i, *j) - 1, std::max(*i, *j) - 1, m});
    }
  }
  return CoxeterDiagram(*rank, std::move(edges), std::string(trim(spec)));
}

}  // namespace

std::string to_string(EdgeLabel m) {
  return m.is_integer() ? std::to_string(m.p) : std::to_string(m.p) + "/" + std::to_string(m.q);
}

CoxeterDiagram::CoxeterDiagram(int rank, std::vector<Edge> edges, std::string name)
    : rank_(rank), edges_(std::move(edges)), name_(std::move(name)) {
  if (rank_ < 1) throw malformed("rank must be positive");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= rank_) throw malformed("edge node out of range");
    if (e.i == e.j) throw malformed("self-loop on node " + std::to_string(e.i + 1));
    if (e.m.p < 3 || e.m.q < 1 || e.m.q >= e.m.p || std::gcd(e.m.p, e.m.q) != 1)
      throw malformed("edge label " + to_string(e.m) + " is not a valid p/q with p >= 3");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& x, const Edge& y) { return std::tie(x.i, x.j) < std::tie(y.i, y.j); });
  for (std::size_t k = 1; k < edges_.size(); ++k)
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j)
      throw malformed("duplicate edge " + std::to_string(edges_[k].i + 1) + "-" +
                      std::to_string(edges_[k].j + 1));
}

std::optional<EdgeLabel> CoxeterDiagram::label(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const auto& e : edges_)
    if (e.i == i && e.j == j) return e.m;
  return std::nullopt;
}

std::vector<int> CoxeterDiagram::neighbours(int i) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.i == i) out.push_back(e.j);
    if (e.j == i) out.push_back(e.i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterDiagram::connected() const {
  std::vector<bool> seen(rank_, false);
  std::deque<int> todo{0};
  seen[0] = true;
  int count = 1;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop_front();
    for (int v : neighbours(u))
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        todo.push_back(v);
      }
  }
  return count == rank_;
}

bool CoxeterDiagram::crystallographic() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.m == EdgeLabel{3, 1}; });
}

CoxeterDiagram build_diagram(std::string_view raw) {
  const std::string_view spec = trim(raw);
  if (spec.empty()) throw malformed("empty diagram spec");
  if (spec.find('=') != std::string_view::npos) return parse_edge_list(spec);

  const std::string name(spec);
  auto family_rank = [&](char letter) -> std::optional<int> {
    if (spec.size() < 2 || spec[0] != letter) return std::nullopt;
    return parse_int(spec.substr(1));
  };

  if (spec == "E6") {
    auto e = chain(5);
    e.push_back({2, 5, {}});
    return {6, e, name};
  }
  if (spec == "E7") {
    auto e = chain(6);
    e.push_back({3, 6, {}});
    return {7, e, name};
  }
  if (spec == "E8") {
    // Chain 1..7 with node 8 on node 5: the labeling under which the pairs
    // (1,7), (2,6), (3,5), (4,8) fold E8 onto H4.
    auto e = chain(7);
    e.push_back({4, 7, {}});
    return {8, e, name};
  }
  if (spec == "F4") return {4, {{0, 1, {}}, {1, 2, {4, 1}}, {2, 3, {}}}, name};
  if (spec == "G2") return {2, {{0, 1, {6, 1}}}, name};
  if (spec == "H3") return {3, chain(3, {5, 1}), name};
  if (spec == "H4") return {4, chain(4, {5, 1}), name};
  if (spec == "H4'") return {4, chain(4, {5, 3}), name};
  if (spec.starts_with("I2(") && spec.ends_with(")")) {
    auto m = parse_label(spec.substr(3, spec.size() - 4));
    if (m == EdgeLabel{2, 1}) return {2, {}, name};
    return {2, {{0, 1, m}}, name};
  }
  if (auto n = family_rank('A')) {
    if (*n < 1) throw malformed("A_n needs n >= 1");
    return {*n, chain(*n), name};
  }
  if (auto n = family_rank('B')) {
    if (*n < 2) throw malformed("B_n needs n >= 2");
    return {*n, chain(*n, {4, 1}), name};
  }
  if (auto n = family_rank('D')) {
    if (*n < 4) throw malformed("D_n needs n >= 4");
    auto e = chain(*n - 1);
    e.push_back({*n - 3, *n - 1, {}});
    return {*n, e, name};
  }
  throw Error(ErrorCode::UnknownDiagram, "unknown diagram '" + name + "'");
}

std::optional<GoldenScalar> exact_two_cos(EdgeLabel m) {
  const int k = ((m.q % (2 * m.p)) + 2 * m.p) % (2 * m.p);
  const GoldenScalar tau = GoldenScalar::tau();
  switch (m.p) {
    case 2: {
      static const int table[4] = {2, 0, -2, 0};
      return GoldenScalar(table[k]);
    }
    case 3: {
      static const int table[6] = {2, 1, -1, -2, -1, 1};
      return GoldenScalar(table[k]);
    }
    case 5: {
      // 2cos(k*pi/5) for k = 0..9
      const GoldenScalar t1 = tau, t2 = tau - 1;
      const GoldenScalar table[10] = {2, t1, t2, -t2, -t1, -2, -t1, -t2, t2, t1};
      return table[k];
    }
    default:
      return std::nullopt;
  }
}

GramMatrix::GramMatrix(const CoxeterDiagram& d) : rank_(d.rank()), cells_(rank_ * rank_) {
  for (int i = 0; i < rank_; ++i) {
    cells_[i * rank_ + i] = {2.0, GoldenScalar(2)};
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      GramEntry& cell = cells_[i * rank_ + j];
      auto m = d.label(i, j);
      if (!m) {
        cell = {0.0, GoldenScalar(0)};
        continue;
      }
      cell.value = -2.0 * std::cos(std::numbers::pi * m->q / m->p);
      if (auto exact = exact_two_cos(*m)) {
        cell.exact = -*exact;
        cell.value = cell.exact->to_double();
      }
    }
  }
}

bool GramMatrix::is_exact() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const GramEntry& c) { return c.exact.has_value(); });
}

Matrix GramMatrix::to_matrix() const {
  Matrix m(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

GramMatrix gram_matrix(const CoxeterDiagram& d) { return GramMatrix(d); }

Bipartition bipartition(const CoxeterDiagram& d) {
  std::vector<int> color(d.rank(), -1);
  for (int start = 0; start < d.rank(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> todo{start};
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop_front();
      for (int v : d.neighbours(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          todo.push_back(v);
        } else if (color[v] == color[u]) {
          throw Error(ErrorCode::NotBipartite, "diagram graph contains an odd cycle");
        }
      }
    }
  }
  Bipartition out;
  for (int i = 0; i < d.rank(); ++i) (color[i] == 0 ? out.color_a : out.color_b).push_back(i);
  return out;
}

}  // namespace gosset
