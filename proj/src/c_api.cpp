// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0

#include "gosset/gosset.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "gosset/coxplane.hpp"
#include "gosset/diagrams.hpp"
#include "gosset/error.hpp"
#include "gosset/masses.hpp"
#include "gosset/project.hpp"
#include "gosset/render.hpp"
#include "gosset/roots.hpp"
#include "gosset/serialize.hpp"
#include "gosset/verify.hpp"

struct gosset_diagram {
  gosset::CoxeterDiagram diagram;
};

struct gosset_roots {
  std::shared_ptr<const gosset::RootSystem> rs;
};

struct gosset_plane {
  std::shared_ptr<const gosset::RootSystem> rs;
  gosset::CoxeterPlane plane;
};

struct gosset_spectrum {
  gosset::CircleSpectrum cs;
  gosset::SpectrumHeader header;
};

namespace {

thread_local std::string last_error;

gosset_status to_status(gosset::ErrorCode code) {
  using gosset::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return GOSSET_ERR_INVALID_ARGUMENT;
    case ErrorCode::DivisionByZero: return GOSSET_ERR_DIVISION_BY_ZERO;
    case ErrorCode::UnknownDiagram: return GOSSET_ERR_UNKNOWN_DIAGRAM;
    case ErrorCode::MalformedSpec: return GOSSET_ERR_MALFORMED_SPEC;
    case ErrorCode::NotFiniteType: return GOSSET_ERR_NOT_FINITE_TYPE;
    case ErrorCode::NotCrystallographic: return GOSSET_ERR_NOT_CRYSTALLOGRAPHIC;
    case ErrorCode::NotBipartite: return GOSSET_ERR_NOT_BIPARTITE;
    case ErrorCode::Disconnected: return GOSSET_ERR_DISCONNECTED;
    case ErrorCode::NoConvergence: return GOSSET_ERR_NO_CONVERGENCE;
    case ErrorCode::Singular: return GOSSET_ERR_SINGULAR;
    case ErrorCode::WrongType: return GOSSET_ERR_WRONG_TYPE;
    case ErrorCode::Internal: return GOSSET_ERR_INTERNAL;
  }
  return GOSSET_ERR_INTERNAL;
}

gosset_status fail(gosset_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body and converts any exception into a status code.
template <class F>
gosset_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return GOSSET_OK;
  } catch (const gosset::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(GOSSET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GOSSET_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define GOSSET_REQUIRE(cond)                                                     \
  do {                                                                           \
    if (!(cond)) return fail(GOSSET_ERR_INVALID_ARGUMENT, "null or bad argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* gosset_version(void) { return "1.0.0"; }

const char* gosset_status_string(gosset_status status) {
  switch (status) {
    case GOSSET_OK: return "ok";
    case GOSSET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GOSSET_ERR_DIVISION_BY_ZERO: return "division by zero";
    case GOSSET_ERR_UNKNOWN_DIAGRAM: return "unknown diagram";
    case GOSSET_ERR_MALFORMED_SPEC: return "malformed diagram spec";
    case GOSSET_ERR_NOT_FINITE_TYPE: return "not of finite type";
    case GOSSET_ERR_NOT_CRYSTALLOGRAPHIC: return "not crystallographic";
    case GOSSET_ERR_NOT_BIPARTITE: return "not bipartite";
    case GOSSET_ERR_DISCONNECTED: return "disconnected diagram";
    case GOSSET_ERR_NO_CONVERGENCE: return "no convergence";
    case GOSSET_ERR_SINGULAR: return "singular matrix";
    case GOSSET_ERR_WRONG_TYPE: return "wrong root system type";
    case GOSSET_ERR_INTERNAL: return "internal error";
    case GOSSET_ERR_OUT_OF_RANGE: return "index out of range";
    case GOSSET_ERR_IO: return "i/o error";
  }
  return "unknown status";
}

const char* gosset_last_error(void) { return last_error.c_str(); }

void gosset_string_free(char* s) { std::free(s); }

gosset_status gosset_diagram_parse(const char* spec, gosset_diagram** out) {
  GOSSET_REQUIRE(spec && out);
  *out = nullptr;
  return guarded([&] { *out = new gosset_diagram{gosset::build_diagram(spec)}; });
}

void gosset_diagram_free(gosset_diagram* d) { delete d; }

int gosset_diagram_rank(const gosset_diagram* d) { return d ? d->diagram.rank() : 0; }

size_t gosset_diagram_edge_count(const gosset_diagram* d) { return d ? d->diagram.edges().size() : 0; }

gosset_status gosset_diagram_edge(const gosset_diagram* d, size_t k, int* i, int* j, int* p, int* q) {
  GOSSET_REQUIRE(d && i && j && p && q);
  if (k >= d->diagram.edges().size()) return fail(GOSSET_ERR_OUT_OF_RANGE, "edge index out of range");
  const auto& e = d->diagram.edges()[k];
  *i = e.i + 1;
  *j = e.j + 1;
  *p = e.m.p;
  *q = e.m.q;
  return GOSSET_OK;
}

gosset_status gosset_diagram_gram(const gosset_diagram* d, int i, int j, double* value, char** exact_text) {
  GOSSET_REQUIRE(d && value);
  const int n = d->diagram.rank();
  if (i < 1 || j < 1 || i > n || j > n) return fail(GOSSET_ERR_OUT_OF_RANGE, "Gram index out of range");
  return guarded([&] {
    const auto cell = gosset::gram_matrix(d->diagram).entry(i - 1, j - 1);
    *value = cell.value;
    if (exact_text) *exact_text = cell.exact ? copy_string(cell.exact->to_string()) : nullptr;
  });
}

gosset_status gosset_diagram_bipartition(const gosset_diagram* d, int* color_a, size_t* na, int* color_b,
                                         size_t* nb) {
  GOSSET_REQUIRE(d && color_a && na && color_b && nb);
  return guarded([&] {
    const auto parts = gosset::bipartition(d->diagram);
    *na = parts.color_a.size();
    *nb = parts.color_b.size();
    for (size_t k = 0; k < parts.color_a.size(); ++k) color_a[k] = parts.color_a[k] + 1;
    for (size_t k = 0; k < parts.color_b.size(); ++k) color_b[k] = parts.color_b[k] + 1;
  });
}

gosset_status gosset_roots_enumerate(const gosset_diagram* d, gosset_roots** out) {
  GOSSET_REQUIRE(d && out);
  *out = nullptr;
  return guarded([&] {
    auto rs = std::make_shared<const gosset::RootSystem>(gosset::enumerate_roots(d->diagram));
    *out = new gosset_roots{std::move(rs)};
  });
}

void gosset_roots_free(gosset_roots* rs) { delete rs; }

size_t gosset_roots_count(const gosset_roots* rs) { return rs ? rs->rs->roots().size() : 0; }

int gosset_roots_coxeter_number(const gosset_roots* rs) { return rs ? rs->rs->coxeter_number() : 0; }

int gosset_roots_rank(const gosset_roots* rs) { return rs ? rs->rs->rank() : 0; }

gosset_status gosset_roots_get(const gosset_roots* rs, size_t k, double* coords) {
  GOSSET_REQUIRE(rs && coords);
  if (k >= rs->rs->roots().size()) return fail(GOSSET_ERR_OUT_OF_RANGE, "root index out of range");
  const auto& v = rs->rs->roots()[k];
  for (size_t i = 0; i < v.dim(); ++i) coords[i] = v[i];
  return GOSSET_OK;
}

gosset_status gosset_roots_marks(const gosset_roots* rs, int* marks) {
  GOSSET_REQUIRE(rs && marks);
  return guarded([&] {
    const auto top = gosset::highest_root(*rs->rs);
    for (size_t i = 0; i < top.marks.size(); ++i) marks[i] = top.marks[i];
  });
}

gosset_status gosset_plane_build(const gosset_roots* rs, gosset_plane** out) {
  GOSSET_REQUIRE(rs && out);
  *out = nullptr;
  return guarded([&] {
    auto plane = gosset::build_coxeter_plane(*rs->rs);
    *out = new gosset_plane{rs->rs, std::move(plane)};
  });
}

void gosset_plane_free(gosset_plane* p) { delete p; }

double gosset_plane_c(const gosset_plane* p) { return p ? p->plane.c : 0.0; }

int gosset_plane_h(const gosset_plane* p) { return p ? p->plane.h : 0; }

int gosset_plane_h_spectral(const gosset_plane* p) { return p ? p->plane.h_spectral : 0; }

gosset_status gosset_plane_z(const gosset_plane* p, double* z, size_t n) {
  GOSSET_REQUIRE(p && z);
  if (n < p->plane.z.dim()) return fail(GOSSET_ERR_OUT_OF_RANGE, "buffer shorter than the rank");
  for (size_t i = 0; i < p->plane.z.dim(); ++i) z[i] = p->plane.z[i];
  return GOSSET_OK;
}

gosset_status gosset_plane_orbits(const gosset_plane* p, int* labels, size_t* sizes, size_t n) {
  GOSSET_REQUIRE(p && labels && sizes);
  if (n < static_cast<size_t>(p->rs->rank())) return fail(GOSSET_ERR_OUT_OF_RANGE, "buffer shorter than the rank");
  return guarded([&] {
    const auto gens = gosset::dihedral_generators(p->plane, *p->rs);
    const auto orbits = gosset::orbit_decomposition(*p->rs, gens);
    for (size_t k = 0; k < orbits.size(); ++k) {
      labels[k] = orbits[k].label + 1;
      sizes[k] = orbits[k].members.size();
    }
  });
}

gosset_status gosset_spectrum_compute(const gosset_plane* p, gosset_mode mode, gosset_point_set points,
                                      double rel_tol, gosset_spectrum** out) {
  GOSSET_REQUIRE(p && out);
  GOSSET_REQUIRE(mode == GOSSET_MODE_ORTHO || mode == GOSSET_MODE_SKEW);
  GOSSET_REQUIRE(points == GOSSET_POINTS_ROOTS || points == GOSSET_POINTS_SIMPLES ||
                 points == GOSSET_POINTS_WEIGHTS);
  *out = nullptr;
  return guarded([&] {
    const auto& rs = *p->rs;
    std::vector<gosset::Vector> vs;
    switch (points) {
      case GOSSET_POINTS_ROOTS: vs = rs.roots(); break;
      case GOSSET_POINTS_SIMPLES: vs = rs.simples(); break;
      case GOSSET_POINTS_WEIGHTS: vs = gosset::fundamental_weights(rs); break;
    }
    const auto m = mode == GOSSET_MODE_ORTHO ? gosset::ProjectionMode::Orthogonal : gosset::ProjectionMode::Skew;
    const auto pts = gosset::project_all(p->plane, vs, m);
    const double tol = rel_tol > 0.0 ? rel_tol : 1e-6;
    auto cs = gosset::circle_spectrum(pts, m, tol);
    gosset::SpectrumHeader header{rs.diagram().name(), p->plane.c, p->plane.h};
    *out = new gosset_spectrum{std::move(cs), std::move(header)};
  });
}

void gosset_spectrum_free(gosset_spectrum* s) { delete s; }

size_t gosset_spectrum_circle_count(const gosset_spectrum* s) { return s ? s->cs.circles.size() : 0; }

gosset_status gosset_spectrum_circle(const gosset_spectrum* s, size_t k, double* radius, size_t* count) {
  GOSSET_REQUIRE(s && radius && count);
  if (k >= s->cs.circles.size()) return fail(GOSSET_ERR_OUT_OF_RANGE, "circle index out of range");
  *radius = s->cs.circles[k].radius;
  *count = s->cs.circles[k].count();
  return GOSSET_OK;
}

gosset_status gosset_spectrum_to_json(const gosset_spectrum* s, char** out) {
  GOSSET_REQUIRE(s && out);
  return guarded([&] { *out = copy_string(gosset::spectrum_to_json(s->cs, s->header)); });
}

gosset_status gosset_spectrum_to_csv(const gosset_spectrum* s, char** out) {
  GOSSET_REQUIRE(s && out);
  return guarded([&] { *out = copy_string(gosset::spectrum_to_csv(s->cs)); });
}

gosset_status gosset_spectrum_to_svg(const gosset_spectrum* s, int size, int labels, char** out) {
  GOSSET_REQUIRE(s && out);
  return guarded([&] { *out = copy_string(gosset::render_spectrum(s->cs, {size, labels != 0})); });
}

gosset_status gosset_masses_zamolodchikov(double m1, double* masses) {
  GOSSET_REQUIRE(masses);
  return guarded([&] {
    const auto s = gosset::zamolodchikov_spectrum(m1);
    for (int k = 0; k < 8; ++k) masses[k] = s.masses[k];
  });
}

gosset_status gosset_masses_toda(const gosset_roots* e8, double* masses) {
  GOSSET_REQUIRE(e8 && masses);
  return guarded([&] {
    const auto m = gosset::toda_masses(gosset::toda_mass_matrix(*e8->rs));
    for (int k = 0; k < 8; ++k) masses[k] = m[k];
  });
}

gosset_status gosset_ratio_max_dev(const double* a, const double* b, size_t n, double* max_rel_dev) {
  GOSSET_REQUIRE(a && b && max_rel_dev);
  return guarded([&] {
    *max_rel_dev = gosset::ratio_report(std::span<const double>(a, n), std::span<const double>(b, n)).max_rel_dev;
  });
}

gosset_status gosset_verify(const gosset_diagram* d, gosset_check_callback report, void* user, size_t* failures) {
  GOSSET_REQUIRE(d);
  return guarded([&] {
    size_t failed = 0;
    for (const auto& r : gosset::run_invariant_suite(d->diagram)) {
      failed += !r.passed;
      if (report) report(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
    }
    if (failures) *failures = failed;
  });
}

}  // extern "C"
