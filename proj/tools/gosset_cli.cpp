// Copyright 2026 The gosset Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the C API in gosset/gosset.h.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gosset/gosset.h"

namespace {

enum ExitCode { kSuccess = 0, kVerifyFailed = 1, kUsage = 2, kComputation = 3 };

// Thrown when a library call fails; carries the message for stderr.
struct ComputationError {
  std::string message;
  gosset_status status = GOSSET_ERR_INTERNAL;
};

void check(gosset_status status, const char* what) {
  if (status == GOSSET_OK) return;
  std::string msg = std::string(what) + ": " + gosset_status_string(status);
  const std::string detail = gosset_last_error();
  if (!detail.empty()) msg += " (" + detail + ")";
  throw ComputationError{msg, status};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using DiagramPtr = std::unique_ptr<gosset_diagram, Deleter<gosset_diagram, gosset_diagram_free>>;
using RootsPtr = std::unique_ptr<gosset_roots, Deleter<gosset_roots, gosset_roots_free>>;
using PlanePtr = std::unique_ptr<gosset_plane, Deleter<gosset_plane, gosset_plane_free>>;
using SpectrumPtr = std::unique_ptr<gosset_spectrum, Deleter<gosset_spectrum, gosset_spectrum_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, gosset_string_free>>;

DiagramPtr parse(const std::string& spec) {
  gosset_diagram* d = nullptr;
  check(gosset_diagram_parse(spec.c_str(), &d), "diagram");
  return DiagramPtr(d);
}

RootsPtr enumerate(const gosset_diagram* d) {
  gosset_roots* rs = nullptr;
  check(gosset_roots_enumerate(d, &rs), "roots");
  return RootsPtr(rs);
}

PlanePtr plane_of(const gosset_roots* rs) {
  gosset_plane* p = nullptr;
  check(gosset_plane_build(rs, &p), "coxeter plane");
  return PlanePtr(p);
}

std::string g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int cmd_diagram(const std::string& spec) {
  auto d = parse(spec);
  const int n = gosset_diagram_rank(d.get());
  std::cout << "rank " << n << "\n";
  std::cout << "edges";
  for (size_t k = 0; k < gosset_diagram_edge_count(d.get()); ++k) {
    int i, j, p, q;
    check(gosset_diagram_edge(d.get(), k, &i, &j, &p, &q), "edge");
    std::cout << ' ' << i << '-' << j << ':' << p;
    if (q != 1) std::cout << '/' << q;
  }
  std::cout << "\ngram\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      double v;
      char* exact = nullptr;
      check(gosset_diagram_gram(d.get(), i, j, &v, &exact), "gram");
      StringPtr hold(exact);
      std::cout << (j > 1 ? "\t" : "  ") << g(v);
    }
    std::cout << "\n";
  }
  std::cout << "gram (exact)\n";
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      double v;
      char* exact = nullptr;
      check(gosset_diagram_gram(d.get(), i, j, &v, &exact), "gram");
      StringPtr hold(exact);
      std::cout << (j > 1 ? "\t" : "  ") << (exact ? exact : "~" + g(v));
    }
    std::cout << "\n";
  }
  return kSuccess;
}

int cmd_roots(const std::string& spec) {
  auto d = parse(spec);
  auto rs = enumerate(d.get());
  std::cout << gosset_roots_count(rs.get()) << " roots, h = " << gosset_roots_coxeter_number(rs.get()) << "\n";
  std::vector<int> marks(gosset_roots_rank(rs.get()));
  const gosset_status st = gosset_roots_marks(rs.get(), marks.data());
  if (st == GOSSET_OK) {
    int sum = 0;
    std::cout << "marks";
    for (int m : marks) {
      std::cout << ' ' << m;
      sum += m;
    }
    std::cout << " (sum " << sum << ")\n";
  } else if (st == GOSSET_ERR_NOT_CRYSTALLOGRAPHIC || st == GOSSET_ERR_DISCONNECTED) {
    std::cout << "marks n/a (" << gosset_status_string(st) << ")\n";
  } else {
    check(st, "marks");
  }
  return kSuccess;
}

int cmd_eigvec(const std::string& spec) {
  auto d = parse(spec);
  auto rs = enumerate(d.get());
  auto p = plane_of(rs.get());
  std::vector<double> z(gosset_roots_rank(rs.get()));
  check(gosset_plane_z(p.get(), z.data(), z.size()), "eigenvector");
  std::cout << "c = " << g(gosset_plane_c(p.get())) << "\n";
  std::cout << "h = " << gosset_plane_h(p.get()) << " (spectral " << gosset_plane_h_spectral(p.get()) << ")\n";
  std::cout << "z =";
  for (double x : z) std::cout << ' ' << g(x);
  std::cout << "\n";
  return kSuccess;
}

struct ProjectOptions {
  std::string spec;
  std::string mode = "ortho";
  std::string points = "roots";
  std::string out = "json";
  std::string file;
  double tol = 0.0;
  int size = 640;
  bool labels = false;
};

int cmd_project(const ProjectOptions& o) {
  auto d = parse(o.spec);
  auto rs = enumerate(d.get());
  auto p = plane_of(rs.get());
  const gosset_mode mode = o.mode == "skew" ? GOSSET_MODE_SKEW : GOSSET_MODE_ORTHO;
  const gosset_point_set pts = o.points == "simples"   ? GOSSET_POINTS_SIMPLES
                               : o.points == "weights" ? GOSSET_POINTS_WEIGHTS
                                                       : GOSSET_POINTS_ROOTS;
  gosset_spectrum* raw = nullptr;
  check(gosset_spectrum_compute(p.get(), mode, pts, o.tol, &raw), "projection");
  SpectrumPtr s(raw);

  char* text = nullptr;
  if (o.out == "csv") {
    check(gosset_spectrum_to_csv(s.get(), &text), "csv");
  } else if (o.out == "svg") {
    check(gosset_spectrum_to_svg(s.get(), o.size, o.labels, &text), "svg");
  } else {
    check(gosset_spectrum_to_json(s.get(), &text), "json");
  }
  StringPtr doc(text);
  if (o.file.empty()) {
    std::cout << doc.get();
  } else {
    std::ofstream f(o.file, std::ios::binary);
    f << doc.get();
    if (!f) throw ComputationError{"cannot write " + o.file, GOSSET_ERR_IO};
  }
  return kSuccess;
}

int cmd_masses(double m1) {
  double zam[8];
  check(gosset_masses_zamolodchikov(m1, zam), "masses");
  auto d = parse("E8");
  auto rs = enumerate(d.get());
  double toda[8];
  check(gosset_masses_toda(rs.get(), toda), "toda masses");
  double dev = 0.0;
  check(gosset_ratio_max_dev(zam, toda, 8, &dev), "ratio report");

  std::printf("%-3s %-8s %-16s %-16s %s\n", "k", "mass", "mass (12 sig.)", "toda (scaled)", "rel. dev");
  for (int k = 0; k < 8; ++k) {
    const double t = toda[k] / toda[0] * m1;
    std::printf("%-3d %-8.4f %-16s %-16s %.3g\n", k + 1, zam[k], g(zam[k]).c_str(), g(t).c_str(),
                std::abs(t - zam[k]) / zam[k]);
  }
  std::printf("toda cross-check: max relative deviation %.3g\n", dev);
  return dev < 1e-9 ? kSuccess : kVerifyFailed;
}

void print_check(const char* name, int passed, const char* detail, void*) {
  std::cout << (passed ? "PASS " : "FAIL ") << name;
  if (detail && *detail) std::cout << "  [" << detail << "]";
  std::cout << "\n";
}

int cmd_verify(const std::string& spec) {
  auto d = parse(spec);
  size_t failures = 0;
  check(gosset_verify(d.get(), print_check, nullptr, &failures), "verify");
  std::cout << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures == 0 ? kSuccess : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gosset: Coxeter planes, Gosset circles and E8 mass ratios"};
  app.require_subcommand(1);

  std::string spec;
  auto* diagram = app.add_subcommand("diagram", "Print rank, edges and Gram matrix");
  diagram->add_option("spec", spec, "Diagram name or rank=N;edges=i-j:m,...")->required();
  auto* roots = app.add_subcommand("roots", "Enumerate the root system");
  roots->add_option("spec", spec, "Diagram spec")->required();
  auto* eigvec = app.add_subcommand("eigvec", "Perron eigenvalue c and eigenvector z");
  eigvec->add_option("spec", spec, "Diagram spec")->required();

  ProjectOptions po;
  auto* project = app.add_subcommand("project", "Project onto the Coxeter plane and group into circles");
  project->add_option("spec", po.spec, "Diagram spec")->required();
  project->add_option("--mode", po.mode, "Projection mode")->check(CLI::IsMember({"ortho", "skew"}));
  project->add_option("--points", po.points, "Vectors to project")
      ->check(CLI::IsMember({"roots", "simples", "weights"}));
  project->add_option("--out", po.out, "Output format")->check(CLI::IsMember({"json", "csv", "svg"}));
  project->add_option("--file", po.file, "Write to this path instead of stdout");
  project->add_option("--tol", po.tol, "Relative radius grouping tolerance (default 1e-6)")
      ->check(CLI::PositiveNumber);
  project->add_option("--size", po.size, "SVG canvas size in pixels")->check(CLI::Range(64, 100000));
  project->add_flag("--labels", po.labels, "Annotate SVG circles with their radii");

  double m1 = 1.0;
  auto* masses = app.add_subcommand("masses", "Mass spectrum and Toda cross-check");
  masses->add_option("--m1", m1, "Lightest mass")->check(CLI::PositiveNumber);

  std::string verify_spec = "E8";
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("spec", verify_spec, "Diagram spec (default E8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*diagram) return cmd_diagram(spec);
    if (*roots) return cmd_roots(spec);
    if (*eigvec) return cmd_eigvec(spec);
    if (*project) return cmd_project(po);
    if (*masses) return cmd_masses(m1);
    if (*verify) return cmd_verify(verify_spec);
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.message << "\n";
    // A diagram spec that does not parse is a usage problem.
    if (e.status == GOSSET_ERR_UNKNOWN_DIAGRAM || e.status == GOSSET_ERR_MALFORMED_SPEC) return kUsage;
    return kComputation;
  }
  return kUsage;
}
