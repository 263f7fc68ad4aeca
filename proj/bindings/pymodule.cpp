#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilbcover/body_io.hpp"
#include "hilbcover/checks.hpp"
#include "hilbcover/experiment.hpp"

namespace py = pybind11;
using namespace hilbcover;

namespace {

Vec to_vec(const std::vector<double>& coords) {
  if (coords.size() > 3) throw Error(ErrorCode::ParseError, "points have at most 3 coordinates");
  Vec p = Vec::Zero();
  for (size_t i = 0; i < coords.size(); ++i) p[static_cast<int>(i)] = coords[i];
  return p;
}

std::vector<double> from_vec(const Vec& v, int dim) {
  std::vector<double> out(dim);
  for (int k = 0; k < dim; ++k) out[k] = v[k];
  return out;
}

std::vector<std::vector<double>> vertex_list(const ConvexBody& b) {
  std::vector<std::vector<double>> out;
  for (const Vec& v : b.vertices()) out.push_back(from_vec(v, b.dim()));
  return out;
}

GeometryTag tag_of(const std::string& s) {
  if (s == "funk") return GeometryTag::Funk;
  if (s == "hilbert") return GeometryTag::Hilbert;
  if (s == "minkowski") return GeometryTag::Minkowski;
  throw Error(ErrorCode::ParseError, "unknown geometry tag: " + s);
}

py::dict measure_dict(const MeasureEstimate& m) {
  py::dict d;
  d["value"] = m.value;
  d["std_error"] = m.std_error;
  d["n_samples"] = m.n_samples;
  d["method"] = m.method == MeasureMethod::Exact        ? "exact"
                : m.method == MeasureMethod::Quadrature ? "quadrature"
                                                        : "monte_carlo";
  d["seed"] = m.seed;
  return d;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["check_id"] = r.check_id;
  d["inputs"] = r.inputs;
  d["dim"] = r.dim;
  d["alpha"] = r.alpha;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  d["ratio"] = r.ratio;
  d["std_error"] = r.std_error;
  d["tolerance"] = r.tolerance;
  d["pass"] = r.pass;
  d["seed"] = r.seed;
  d["runtime_ms"] = r.runtime_ms;
  d["note"] = r.note;
  return d;
}

CheckConfig config_from(int dim, double alpha, long n_samples, int n_dir, int n_instances,
                        std::uint64_t seed) {
  CheckConfig cfg;
  cfg.dim = dim;
  cfg.alpha = alpha;
  cfg.n_samples = n_samples;
  cfg.n_dir = n_dir;
  cfg.n_instances = n_instances;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Funk, Hilbert and Minkowski convex geometry on low-dimensional polytopes";

  py::register_exception<Error>(m, "GeometryError");

  py::class_<ConvexBody>(m, "ConvexBody")
      .def_static(
          "from_vertices",
          [](int dim, const std::vector<std::vector<double>>& pts, const std::string& name,
             bool normalize) {
            std::vector<Vec> v;
            for (const auto& p : pts) v.push_back(to_vec(p));
            return ConvexBody::from_vertices(dim, v, name, normalize);
          },
          py::arg("dim"), py::arg("vertices"), py::arg("name") = "", py::arg("normalize") = false)
      .def_property_readonly("dim", &ConvexBody::dim)
      .def_property_readonly("vertices", &vertex_list)
      .def_property_readonly("name", &ConvexBody::name)
      .def_property_readonly("volume", &ConvexBody::volume)
      .def_property_readonly("boundary_measure", &ConvexBody::boundary_measure)
      .def_property_readonly("scale_factor", &ConvexBody::scale_factor)
      .def_property_readonly("contains_origin_interior", &ConvexBody::contains_origin_interior)
      .def_property_readonly("centrally_symmetric", &ConvexBody::centrally_symmetric)
      .def_property_readonly("centroid",
                             [](const ConvexBody& b) { return from_vec(b.centroid(), b.dim()); })
      .def("support", [](const ConvexBody& b, const std::vector<double>& u) { return b.support(to_vec(u)); })
      .def("gauge", [](const ConvexBody& b, const std::vector<double>& u) { return b.gauge(to_vec(u)); })
      .def(
          "contains",
          [](const ConvexBody& b, const std::vector<double>& p, double tol) {
            return b.contains(to_vec(p), tol);
          },
          py::arg("point"), py::arg("tol") = kEpsGeom)
      .def("ray_exit",
           [](const ConvexBody& b, const std::vector<double>& origin, const std::vector<double>& dir) {
             auto [p, t] = b.ray_exit(to_vec(origin), to_vec(dir));
             return py::make_tuple(from_vec(p, b.dim()), t);
           })
      .def("translated", [](const ConvexBody& b, const std::vector<double>& t) {
        return b.translated(to_vec(t));
      })
      .def("scaled", &ConvexBody::scaled)
      .def("__repr__", [](const ConvexBody& b) {
        return "<ConvexBody dim=" + std::to_string(b.dim()) + " vertices=" +
               std::to_string(b.vertices().size()) +
               (b.name().empty() ? "" : " name=" + b.name()) + ">";
      });

  // generators and body operations
  m.def("cube", &make_cube, py::arg("dim") = 2);
  m.def("scaled_cube", &make_scaled_cube, py::arg("dim"), py::arg("r"));
  m.def("cross_polytope", &make_cross, py::arg("dim") = 2);
  m.def("simplex", &make_simplex, py::arg("dim") = 2);
  m.def("ngon", &make_ngon, py::arg("k"));
  m.def("interval", &make_interval, py::arg("a"), py::arg("b"));
  m.def("random_hull", &make_random_hull, py::arg("dim"), py::arg("n"), py::arg("seed"));
  m.def("recentered", &recentered);
  m.def("parse_body_spec", &parse_body_spec, py::arg("spec"), py::arg("dim_hint") = 2);
  m.def("body_to_json", &body_to_json);

  m.def("polar", &polar);
  m.def("minkowski_sum", &minkowski_sum);
  m.def("intersect", &intersect);
  m.def("hull_of", &hull_of);
  m.def("hausdorff_distance", &hausdorff_distance);
  m.def(
      "macbeath",
      [](const ConvexBody& K, const std::vector<double>& x, double lam) {
        return macbeath(K, to_vec(x), lam);
      },
      py::arg("K"), py::arg("x"), py::arg("lam") = 1.0);
  m.def("symmetrize", [](const ConvexBody& C, const std::string& mode) {
    if (mode == "core") return symmetrize(C, SymmetrizeMode::Core);
    if (mode == "union") return symmetrize(C, SymmetrizeMode::Union);
    if (mode == "difference") return symmetrize(C, SymmetrizeMode::Difference);
    throw Error(ErrorCode::ParseError, "mode must be core | union | difference");
  });

  // metrics
  m.def("funk_distance", [](const ConvexBody& K, const std::vector<double>& x,
                            const std::vector<double>& y) { return funk_distance(K, to_vec(x), to_vec(y)); });
  m.def("funk_distance_variational",
        [](const ConvexBody& K, const std::vector<double>& x, const std::vector<double>& y) {
          return funk_distance_variational(K, to_vec(x), to_vec(y));
        });
  m.def("hilbert_distance", [](const ConvexBody& K, const std::vector<double>& x,
                               const std::vector<double>& y) {
    return hilbert_distance(K, to_vec(x), to_vec(y));
  });
  m.def(
      "hilbert_ball",
      [](const ConvexBody& K, const std::vector<double>& x, double r, int n_dir) {
        return hilbert_ball(K, to_vec(x), r, n_dir).to_body();
      },
      py::arg("K"), py::arg("x"), py::arg("r"), py::arg("n_dir") = 720);
  m.def(
      "hilbert_finsler_ball",
      [](const ConvexBody& K, const std::vector<double>& x, int n_dir) {
        return hilbert_finsler_ball(K, to_vec(x), n_dir).to_body();
      },
      py::arg("K"), py::arg("x"), py::arg("n_dir") = 720);
  m.def(
      "funk_finsler_ball",
      [](const ConvexBody& K, const std::vector<double>& x, int n_dir) {
        return funk_finsler_ball(K, to_vec(x), n_dir).to_body();
      },
      py::arg("K"), py::arg("x"), py::arg("n_dir") = 720);
  m.def("projective_polar_map",
        [](int dim, const std::vector<double>& x, const std::vector<double>& y) {
          ProjectiveMapResult r = projective_polar_map(dim, to_vec(x), to_vec(y));
          std::vector<std::vector<double>> jac(dim, std::vector<double>(dim));
          for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) jac[i][j] = r.jacobian(i, j);
          return py::make_tuple(from_vec(r.image, dim), jac, r.det);
        });
  m.def(
      "distance_to_set_hilbert",
      [](const ConvexBody& K, const std::vector<double>& z, const ConvexBody& G, double tol) {
        return distance_to_set_hilbert(K, to_vec(z), G, tol);
      },
      py::arg("K"), py::arg("z"), py::arg("G"), py::arg("tol") = 1e-6);
  m.def(
      "distance_to_set_minkowski",
      [](const ConvexBody& D, const std::vector<double>& z, const ConvexBody& G, double tol) {
        return distance_to_set_minkowski(D, to_vec(z), G, tol);
      },
      py::arg("D"), py::arg("z"), py::arg("G"), py::arg("tol") = 1e-6);
  m.def(
      "sandwich_estimate",
      [](const ConvexBody& K, const std::vector<double>& x, double r, int n_dir) {
        auto [sig, tau] = sandwich_estimate(K, to_vec(x), r, n_dir);
        return py::make_tuple(sig, tau);
      },
      py::arg("K"), py::arg("x"), py::arg("r"), py::arg("n_dir") = 720);

  // measures
  m.def("ht_volume_minkowski",
        [](const ConvexBody& D, const ConvexBody& U) { return measure_dict(ht_volume_minkowski(D, U)); });
  m.def("ht_area_minkowski",
        [](const ConvexBody& D, const ConvexBody& C) { return measure_dict(ht_area_minkowski(D, C)); });
  m.def("ht_area_minkowski_cauchy", [](const ConvexBody& D, const ConvexBody& C) {
    return measure_dict(ht_area_minkowski_cauchy(D, C));
  });
  m.def(
      "ht_volume_finsler",
      [](const std::string& tag, const ConvexBody& K, const ConvexBody& U, long n, std::uint64_t seed) {
        return measure_dict(ht_volume_finsler(tag_of(tag), K, U, n, seed));
      },
      py::arg("geometry"), py::arg("K"), py::arg("U"), py::arg("n_samples") = 20000,
      py::arg("seed") = 1);
  m.def(
      "ht_area_finsler",
      [](const std::string& tag, const ConvexBody& K, const ConvexBody& G, int order) {
        return measure_dict(ht_area_finsler(tag_of(tag), K, G, order));
      },
      py::arg("geometry"), py::arg("K"), py::arg("G"), py::arg("quad_order") = 8);
  m.def("busemann_volume",
        [](const ConvexBody& D, const ConvexBody& U) { return measure_dict(busemann_volume(D, U)); });
  m.def("busemann_area",
        [](const ConvexBody& D, const ConvexBody& C) { return measure_dict(busemann_area(D, C)); });
  m.def("volume_product", &volume_product);
  m.def(
      "ball_growth_hilbert",
      [](const ConvexBody& K, const std::vector<double>& x, const std::vector<double>& radii,
         int n_dir) {
        GrowthProfile p = ball_growth_hilbert(K, to_vec(x), radii, n_dir);
        py::dict d;
        std::vector<py::dict> rows;
        for (const GrowthRow& row : p.rows) {
          py::dict rd;
          rd["r"] = row.r;
          rd["vol"] = row.vol;
          rd["area"] = row.area;
          rows.push_back(rd);
        }
        d["rows"] = rows;
        d["slope_vol"] = p.slope_vol;
        d["slope_area"] = p.slope_area;
        return d;
      },
      py::arg("K"), py::arg("x"), py::arg("radii"), py::arg("n_dir") = 256);

  // covering and expansion
  m.def("expand_minkowski", &expand_minkowski);
  m.def("expand_hilbert", &expand_hilbert, py::arg("K"), py::arg("G"), py::arg("alpha"),
        py::arg("n_dir") = 720, py::arg("tol") = 1e-9);
  m.def(
      "covering_estimate",
      [](const std::string& metric, const ConvexBody& ambient, const ConvexBody& target,
         const std::string& kind, double alpha, std::uint64_t seed, int n_net_seeds) {
        MetricSpace ms = metric == "hilbert" ? hilbert_space(ambient) : minkowski_space(ambient);
        TargetKind tk = kind == "boundary" ? TargetKind::Boundary : TargetKind::Body;
        CoverEstimate est = covering_estimate(ms, target, tk, alpha, seed, n_net_seeds);
        py::dict d;
        d["upper"] = est.upper;
        d["lower"] = est.lower;
        d["alpha"] = est.alpha;
        d["target"] = kind;
        d["clamped"] = est.clamped;
        d["exact"] = est.exact;
        return d;
      },
      py::arg("metric"), py::arg("ambient"), py::arg("target"), py::arg("kind") = "body",
      py::arg("alpha") = 0.2, py::arg("seed") = 1, py::arg("n_net_seeds") = 5);
  m.def(
      "boundary_transfer_hilbert",
      [](const ConvexBody& K, const ConvexBody& G, double alpha, int n_probes, std::uint64_t seed) {
        BoundaryTransferResult r = boundary_transfer_hilbert(K, G, alpha, n_probes, seed);
        py::dict d;
        d["probes"] = r.probes;
        d["attained"] = r.attained;
        d["max_deviation"] = r.max_deviation;
        d["pass"] = r.pass;
        return d;
      },
      py::arg("K"), py::arg("G"), py::arg("alpha"), py::arg("n_probes") = 20, py::arg("seed") = 1);
  m.def(
      "complementary_chord",
      [](const ConvexBody& K, const std::vector<double>& x, const std::vector<double>& normal) {
        Vec n = to_vec(normal).normalized();
        Vec xx = to_vec(x);
        ChordResult r = complementary_chord_2d(K, xx, Halfspace{n, n.dot(xx)});
        py::dict d;
        d["a"] = from_vec(r.a, 2);
        d["b"] = from_vec(r.b, 2);
        d["residual"] = r.residual;
        d["theta"] = r.theta;
        return d;
      },
      py::arg("K"), py::arg("x"), py::arg("line_normal"));

  // checks and sweeps
  m.def("list_checks", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const CheckInfo& c : check_registry()) out.push_back({c.id, c.anchor});
    return out;
  });
  m.def(
      "run_check",
      [](const std::string& id, int dim, double alpha, long n_samples, int n_dir, int n_instances,
         std::uint64_t seed) {
        return report_dict(run_check(id, config_from(dim, alpha, n_samples, n_dir, n_instances, seed)));
      },
      py::arg("check_id"), py::arg("dim") = 2, py::arg("alpha") = 0.2, py::arg("n_samples") = 20000,
      py::arg("n_dir") = 720, py::arg("n_instances") = 0, py::arg("seed") = 1);
  m.def(
      "run_sweep",
      [](int dim, const std::string& mode, int n_instances, const std::vector<double>& alphas,
         int n_seeds, std::uint64_t seed) {
        SweepConfig cfg;
        cfg.dim = dim;
        cfg.mode = mode;
        cfg.n_instances = n_instances;
        cfg.alphas = alphas;
        cfg.n_seeds = n_seeds;
        cfg.seed = seed;
        SweepResult r = run_duality_sweep(cfg);
        py::dict d;
        d["csv"] = sweep_csv(r);
        d["max_ratio_vol"] = r.summary.max_ratio_vol;
        d["max_ratio_bd"] = r.summary.max_ratio_bd;
        d["c_hat_vol"] = r.summary.c_hat_vol;
        d["c_hat_bd"] = r.summary.c_hat_bd;
        d["clamp_rate"] = r.summary.clamp_rate;
        return d;
      },
      py::arg("dim") = 2, py::arg("mode") = "hilbert", py::arg("n_instances") = 10,
      py::arg("alphas") = std::vector<double>{0.1, 0.2, 0.5, 1.0}, py::arg("n_seeds") = 5,
      py::arg("seed") = 1);

  m.attr("R_PLUS") = kRPlus;
  m.attr("EPS_GEOM") = kEpsGeom;
}
