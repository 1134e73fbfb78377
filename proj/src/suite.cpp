// Copyright 2026 The mvcs authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvcs/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mvcs/cuntz.hpp"
#include "mvcs/dilation.hpp"
#include "mvcs/families.hpp"
#include "mvcs/rng.hpp"

namespace mvcs {

namespace {

constexpr const char* kVersion = "0.1.0";

const std::map<std::string, std::vector<std::string>>& family_param_names() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"canonical", {"k_max", "radial_order", "angular_order"}},
      {"vcs_matrix", {"n", "k_max", "radial_order", "angular_order", "su_order"}},
      {"analytic", {"n", "k_max", "mc_samples"}},
      {"quaternion", {"k_max", "r_max", "r_order", "xi_order", "theta_order", "phi_order"}},
      {"landau", {"k_max", "l_max", "z_prime_re", "z_prime_im", "radial_order", "angular_order"}},
      {"cuntz", {"d", "k_active", "k_max", "radial_order", "angular_order"}},
  };
  return table;
}

double get_param(const SuiteConfig& cfg, const std::string& key, double dflt) {
  const auto it = cfg.family_params.find(key);
  return it == cfg.family_params.end() ? dflt : it->second;
}

int get_int_param(const SuiteConfig& cfg, const std::string& key, int dflt) {
  const double v = get_param(cfg, key, static_cast<double>(dflt));
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9)
    throw ConfigError("family_params." + key + ": expected an integer, got " +
                      std::to_string(v));
  return static_cast<int>(r);
}

void validate_config(const SuiteConfig& cfg) {
  const auto& fams = known_families();
  if (std::find(fams.begin(), fams.end(), cfg.family) == fams.end())
    throw ConfigError("unknown family '" + cfg.family + "'");
  const auto& allowed = family_param_names().at(cfg.family);
  for (const auto& [key, value] : cfg.family_params) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError("unknown family_params key '" + key + "' for family '" + cfg.family +
                        "'");
  }
  const auto& checks = known_checks();
  for (const auto& c : cfg.checks) {
    if (std::find(checks.begin(), checks.end(), c) == checks.end())
      throw ConfigError("unknown check '" + c + "'");
    if ((c == "cuntz" || c == "bijection") && cfg.family != "cuntz")
      throw ConfigError("check '" + c + "' requires family 'cuntz'");
  }
  if (!(cfg.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
}

// Lazily built family objects shared across the checks of one run.
struct Context {
  explicit Context(const SuiteConfig& c) : cfg(c), tol(c.tolerance) {}

  const SuiteConfig& cfg;
  double tol;
  std::optional<CanonicalFamily> canonical;
  std::optional<VcsMatrixFamily> vcs;
  std::optional<CSFamily> analytic;
  std::optional<QuaternionFamily> quat;
  std::optional<LandauFamily> landau;
  std::optional<CSFamily> cuntz;
  std::optional<DilationScene> scene;

  const CSFamily& engine_family() {
    if (cfg.family == "canonical") {
      if (!canonical) {
        const int k_max = get_int_param(cfg, "k_max", 12);
        const int radial = get_int_param(cfg, "radial_order", 40);
        const int angular = get_int_param(cfg, "angular_order", 2 * k_max + 3);
        canonical = canonical_family(bargmann_basis(k_max, radial, angular));
        canonical->family.truncation_tail =
            std::exp(1.0) * (1.0 - poisson_cdf(k_max, 1.0));
      }
      return canonical->family;
    }
    if (cfg.family == "vcs_matrix") {
      if (!vcs) {
        const int n = get_int_param(cfg, "n", 2);
        if (n != 2) throw ConfigError("vcs_matrix: the suite runs the exact SU(2) instance");
        const int k_max = get_int_param(cfg, "k_max", 8);
        const int scalar_deg = k_max / n;
        const int radial = get_int_param(cfg, "radial_order", scalar_deg + 2);
        const int angular = get_int_param(cfg, "angular_order", 2 * scalar_deg + 3);
        const int su_order = get_int_param(cfg, "su_order", 4);
        vcs = vcs_matrix_family(cyclic_bargmann_vector_basis(n), n, k_max,
                                gaussian_c_rule(radial, angular),
                                haar_sun_rule(2, HaarMode::exact_su2, su_order));
      }
      return vcs->family;
    }
    if (cfg.family == "analytic") {
      if (!analytic) {
        const int n = get_int_param(cfg, "n", 2);
        const int k_max = get_int_param(cfg, "k_max", 8);
        const int mc = get_int_param(cfg, "mc_samples", 0);
        if (mc > 0)
          analytic = analytic_family(n, k_max, ginibre_monte_carlo_rule(n, mc, cfg.seed));
        else if (n <= 2)
          analytic = analytic_family(n, k_max, ginibre_moment_rule(n, k_max));
        else
          throw ConfigError("analytic: mc_samples is required for n > 2");
      }
      return *analytic;
    }
    if (cfg.family == "quaternion") {
      if (!quat)
        quat = quaternion_family(get_int_param(cfg, "k_max", 20), get_param(cfg, "r_max", 0.0),
                                 get_int_param(cfg, "r_order", 0),
                                 get_int_param(cfg, "xi_order", 0),
                                 get_int_param(cfg, "theta_order", 4),
                                 get_int_param(cfg, "phi_order", 4));
      return quat->family;
    }
    if (cfg.family == "landau") {
      landau_ref();
      return landau->core;
    }
    if (!cuntz) {
      const int d = get_int_param(cfg, "d", 1000);
      const int k_active = get_int_param(cfg, "k_active", d);
      const int k_max = get_int_param(cfg, "k_max", 12);
      cuntz = cuntz_family(d, k_active, k_max, get_int_param(cfg, "radial_order", k_max + 2),
                           get_int_param(cfg, "angular_order", 2 * k_max + 5));
    }
    return *cuntz;
  }

  LandauFamily& landau_ref() {
    if (!landau) {
      const int k_max = get_int_param(cfg, "k_max", 15);
      const int l_max = get_int_param(cfg, "l_max", 15);
      const Complex zp(get_param(cfg, "z_prime_re", 0.7), get_param(cfg, "z_prime_im", 0.3));
      landau = landau_family(k_max, l_max, zp, get_int_param(cfg, "radial_order", 0),
                             get_int_param(cfg, "angular_order", 0));
    }
    return *landau;
  }

  QuaternionFamily& quaternion_ref() {
    engine_family();
    return *quat;
  }

  // Desk-scale scene for the dilation and minimality checks; carrier sizes
  // are kept well under the dimension cap.
  const DilationScene& dilation_scene() {
    if (!scene) {
      CSFamily fam;
      if (cfg.family == "canonical") {
        fam = canonical_family(bargmann_basis(12, 13, 25)).family;
      } else if (cfg.family == "vcs_matrix") {
        fam = vcs_matrix_family(cyclic_bargmann_vector_basis(2), 2, 2, gaussian_c_rule(3, 5),
                                haar_sun_rule(2, HaarMode::exact_su2, 3))
                  .family;
      } else if (cfg.family == "analytic") {
        fam = analytic_family(2, 1, ginibre_moment_rule(2, 1, 1, 2));
      } else if (cfg.family == "quaternion") {
        fam = quaternion_family(3, 5.0, 20, 8, 2, 2).family;
      } else if (cfg.family == "landau") {
        fam = landau_family(6, 6, landau_ref().z_prime, 8, 15).core;
      } else {
        fam = cuntz_family(16, 16, 4, 6, 11);
      }
      scene = build_dilation(fam, tol);
    }
    return *scene;
  }
};

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult res;
  res.name = name;
  const auto start = Clock::now();
  body(res);
  res.wall_time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return res;
}

std::vector<int> sample_node_indices(Rng& rng, std::size_t node_count, std::size_t want) {
  std::vector<int> out;
  for (std::size_t i = 0; i < want; ++i)
    out.push_back(static_cast<int>(rng.uniform() * static_cast<double>(node_count)) %
                  static_cast<int>(node_count));
  return out;
}

CheckResult check_orthogonality(Context& ctx) {
  return timed("orthogonality", [&](CheckResult& res) {
    const CSFamily& fam = ctx.engine_family();
    const OrthogonalityReport rep = verify_orthogonality(fam, ctx.tol);
    res.defect = rep.max_defect;
    res.bound = rep.bound;
    res.pass = rep.pass;
    res.nodes_used = static_cast<std::int64_t>(fam.rule.size());
  });
}

CheckResult check_resolution(Context& ctx) {
  return timed("resolution", [&](CheckResult& res) {
    if (ctx.cfg.family == "landau") {
      const LandauFamily& fam = ctx.landau_ref();
      const ResolutionReport rep = fam.verify_resolution(ctx.tol);
      res.defect = rep.defect;
      res.bound = rep.bound;
      res.pass = rep.pass;
      res.nodes_used = static_cast<std::int64_t>(fam.core.rule.size());
      return;
    }
    const CSFamily& fam = ctx.engine_family();
    const ResolutionReport rep =
        verify_resolution(fam, CStarMatrix::identity(fam.E.rows), ctx.tol);
    res.defect = std::max(rep.defect, rep.normalized_route_deviation);
    res.bound = rep.bound;
    res.pass = rep.pass;
    res.nodes_used = static_cast<std::int64_t>(fam.rule.size());
  });
}

CheckResult check_normalization(Context& ctx) {
  return timed("normalization", [&](CheckResult& res) {
    Rng rng(ctx.cfg.seed + 11);
    double defect = 0.0;
    if (ctx.cfg.family == "quaternion") {
      QuaternionFamily& fam = ctx.quaternion_ref();
      for (int i = 0; i < 6; ++i) {
        QuaternionParam p;
        p.r = rng.uniform(0.0, 2.0);
        p.xi = rng.uniform(0.0, 6.283185307179586);
        p.theta = std::acos(rng.uniform(-1.0, 1.0));
        p.phi = rng.uniform(0.0, 6.283185307179586);
        defect = std::max(defect, std::abs(fam.norm_sum(p) - 1.0));
        const Matrix v = fam.module_state(p);
        defect = std::max(defect,
                          operator_norm(v.adjoint() * v - Matrix::Identity(2, 2)));
      }
      res.bound = ctx.tol + fam.pointwise_tail(2.0);
    } else if (ctx.cfg.family == "landau") {
      const LandauFamily& fam = ctx.landau_ref();
      for (int i = 0; i < 6; ++i) {
        const Complex z = std::polar(rng.uniform(0.0, 1.2), rng.uniform(0.0, 6.2831853));
        defect = std::max(defect, std::abs(fam.norm_sum(z) - 1.0));
      }
      res.bound = ctx.tol + fam.z_tail(1.2) + fam.level_tail();
    } else {
      const CSFamily& fam = ctx.engine_family();
      const CStarMatrix id = CStarMatrix::identity(fam.E.rows);
      const Matrix id_bc = Matrix::Identity(fam.H().cols, fam.H().cols);
      for (int i = 0; i < 5; ++i) {
        const Node x = sample_moderate_point(fam, rng);
        const CoherentState cs = coherent_state(fam, x, id);
        // N(x, id) against <x|x>, then the normalized state condition.
        const NormalizationElement n = normalization(fam, x, id);
        defect = std::max(defect, operator_norm(n.value.mat() - overlap(cs, cs).mat()));
        const CoherentState hat = normalize(fam, cs);
        defect = std::max(defect, operator_norm(overlap(hat, hat).mat() - id_bc));
      }
      res.bound = ctx.tol + fam.truncation_tail;
    }
    res.defect = defect;
    res.pass = res.defect <= res.bound;
  });
}

CheckResult check_frame(Context& ctx) {
  return timed("frame", [&](CheckResult& res) {
    const CSFamily& fam = ctx.engine_family();
    SpectralTolerance st;
    st.equality_tol = ctx.tol;
    const FrameReport rep = frame_verify(fam.frame, st);
    res.defect = std::max(rep.completeness_defect, rep.orthonormality_defect);
    res.bound = ctx.tol;
    res.pass = rep.pass;
  });
}

CheckResult check_cp_positivity(Context& ctx) {
  return timed("cp_positivity", [&](CheckResult& res) {
    const CSFamily& fam = ctx.engine_family();
    const CPKernel kern = cp_kernel(fam);
    Rng rng(ctx.cfg.seed + 23);
    const Eigen::Index c = fam.H().cols;
    double min_eig = 0.0;
    for (int cfg_idx = 0; cfg_idx < 20; ++cfg_idx) {
      const int n_pts = 2 + static_cast<int>(rng.uniform() * 3.0);
      std::vector<std::pair<Node, CStarMatrix>> points;
      std::vector<CStarMatrix> bs;
      for (int i = 0; i < n_pts; ++i) {
        points.emplace_back(sample_moderate_point(fam, rng),
                            CStarMatrix(haar_special_unitary_sample(
                                static_cast<int>(fam.E.rows), rng)));
        bs.emplace_back(rng.ginibre(c, c));
      }
      const CpPositivityReport rep = cp_positivity_test(kern, points, bs);
      min_eig = std::min(min_eig, std::min(rep.min_eigenvalue, rep.min_eigenvalue_block));
    }
    res.defect = std::max(0.0, -min_eig);
    res.bound = ctx.tol;
    res.pass = res.defect <= res.bound;
  });
}

CheckResult check_reproduce(Context& ctx) {
  return timed("reproduce", [&](CheckResult& res) {
    const CSFamily& fam = ctx.engine_family();
    const CPKernel kern = cp_kernel(fam);
    Rng rng(ctx.cfg.seed + 37);
    const CStarMatrix id = CStarMatrix::identity(fam.E.rows);
    double defect = 0.0, bound = 0.0;
    // Evaluation points come from the leading quarter of the node list
    // (rules order nodes by ascending radius): kernel values at extreme
    // nodes are astronomically scaled and only probe rounding.
    const std::size_t pool = std::max<std::size_t>(1, fam.rule.size() / 4);
    for (int rep_idx = 0; rep_idx < 2; ++rep_idx) {
      const auto idx = sample_node_indices(rng, pool, 2);
      const Node& x = fam.rule.nodes[static_cast<std::size_t>(idx[0])];
      const Node& z = fam.rule.nodes[static_cast<std::size_t>(idx[1])];
      for (int which_b = 0; which_b < 2; ++which_b) {
        const CStarMatrix b =
            which_b == 0
                ? id
                : CStarMatrix(haar_special_unitary_sample(static_cast<int>(fam.E.rows), rng));
        const ReproduceReport rep = kernel_reproduce_check(kern, x, z, id, id, b, ctx.tol);
        defect = std::max(defect, rep.defect);
        bound = rep.bound;
      }
    }
    res.defect = defect;
    res.bound = bound;
    res.pass = res.defect <= res.bound;
    res.nodes_used = static_cast<std::int64_t>(fam.rule.size());
  });
}

CheckResult check_dilation(Context& ctx, int n_subsets) {
  return timed("dilation", [&](CheckResult& res) {
    const DilationScene& scene = ctx.dilation_scene();
    Rng rng(ctx.cfg.seed + 41);
    const auto n = scene.fam.rule.size();
    double defect = 0.0;
    for (int s = 0; s < n_subsets; ++s) {
      const std::size_t want = 1 + static_cast<std::size_t>(rng.uniform() *
                                                            std::min<double>(24.0, double(n)));
      std::vector<int> delta;
      for (std::size_t i = 0; i < n && delta.size() < want; ++i)
        if (rng.uniform() < 0.5) delta.push_back(static_cast<int>(i));
      if (delta.empty()) delta.push_back(0);
      const DilationCheckReport rep = dilation_check(scene, delta);
      defect = std::max(defect, std::max(rep.defect_naimark, rep.defect_pvm));
    }
    // Additivity over a disjoint split of an interval of nodes.
    std::vector<int> d1, d2;
    for (int i = 0; i < static_cast<int>(std::min<std::size_t>(n, 32)); ++i)
      (i % 2 == 0 ? d1 : d2).push_back(i);
    defect = std::max(defect, nu_additivity_defect(scene, d1, d2));
    // Scene-level identities share the row: they must hold within the
    // scene bound for the check to pass.
    const double scene_defect =
        std::max({scene.isometry_defect, scene.projection_defect, scene.frame_identity_defect});
    res.defect = defect;
    res.bound = ctx.tol;
    res.pass = defect <= res.bound && scene_defect <= scene.bound;
    res.nodes_used = static_cast<std::int64_t>(n);
  });
}

CheckResult check_minimality(Context& ctx) {
  return timed("minimality", [&](CheckResult& res) {
    const MinimalityReport rep = minimality_check(ctx.dilation_scene());
    res.defect = static_cast<double>(rep.carrier_dimension - rep.span_dimension);
    res.bound = 0.0;
    res.pass = rep.full;
    res.nodes_used = static_cast<std::int64_t>(ctx.dilation_scene().fam.rule.size());
  });
}

CheckResult check_cuntz(Context& ctx) {
  return timed("cuntz", [&](CheckResult& res) {
    const int d = get_int_param(ctx.cfg, "d", 1000);
    const int k_active = get_int_param(ctx.cfg, "k_active", d);
    const CuntzRep rep(d, k_active);
    const CuntzReport r = verify_cuntz(rep);
    const double oracle_fraction =
        static_cast<double>(covered_row_count(rep, k_active)) / static_cast<double>(d);
    res.defect = std::max({r.isometry_defect, r.range_overlap_defect,
                           std::abs(r.completeness_trace_fraction - oracle_fraction)});
    if (k_active == d)
      res.defect = std::max(res.defect, std::abs(r.completeness_trace_fraction - 1.0));
    res.bound = 0.0;
    res.pass = res.defect <= res.bound;
    res.nodes_used = d;
  });
}

CheckResult check_bijection(Context& ctx) {
  return timed("bijection", [&](CheckResult& res) {
    (void)ctx;
    const std::int64_t count = 1000000;
    std::int64_t failures = 0;
    for (std::int64_t k = 1; k <= count; ++k) {
      const Pair pq = pairing(k);
      if (pq.p < 1 || pq.q < 1 || unpairing(pq.p, pq.q) != k) ++failures;
      const std::int64_t shell = pq.p + pq.q - 2;
      if (shell * (shell + 1) / 2 + pq.q != k) ++failures;  // closed-form inverse
    }
    res.defect = static_cast<double>(failures);
    res.bound = 0.0;
    res.pass = failures == 0;
    res.nodes_used = count;
  });
}

CheckResult check_hermite_gram(Context& ctx) {
  return timed("hermite_gram", [&](CheckResult& res) {
    const int max_index = 6;
    const QuadratureRule rule = gaussian_c_rule(8, 13);
    const int dim = max_index * max_index;
    Matrix gram(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const int k1 = a / max_index + 1, l1 = a % max_index + 1;
        const int k2 = b / max_index + 1, l2 = b % max_index + 1;
        const IntegrationReport ir = integrate_matrix_fn(rule, [&](const Node& x) {
          Matrix m(1, 1);
          m(0, 0) = std::conj(complex_hermite(k1, l1, x.as_complex())) *
                    complex_hermite(k2, l2, x.as_complex());
          return m;
        });
        gram(a, b) = ir.value(0, 0);
      }
    res.defect = operator_norm(gram - Matrix::Identity(dim, dim));
    res.bound = ctx.tol;
    res.pass = res.defect <= res.bound;
    res.nodes_used = static_cast<std::int64_t>(rule.size());
  });
}

CheckResult check_sun_reln(Context& ctx) {
  return timed("sun_reln", [&](CheckResult& res) {
    const QuadratureRule rule = haar_sun_rule(2, HaarMode::exact_su2, 4);
    Rng rng(ctx.cfg.seed + 53);
    double defect = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Vector v = rng.unit_vector(2);
      const IntegrationReport ir = integrate_matrix_fn(rule, [&](const Node& u) {
        const Matrix& um = u.as_matrix();
        return Matrix(um * v * v.adjoint() * um.adjoint());
      });
      defect = std::max(defect,
                        operator_norm(ir.value - 0.5 * Matrix::Identity(2, 2)));
    }
    res.defect = defect;
    res.bound = ctx.tol;
    res.pass = defect <= res.bound;
    res.nodes_used = static_cast<std::int64_t>(rule.size());
  });
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') {
      out += '\\';
      out += ch;
    } else if (ch == '\n') {
      out += "\\n";
    } else {
      out += ch;
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> fams = {"canonical", "vcs_matrix", "analytic",
                                                "quaternion", "landau",     "cuntz"};
  return fams;
}

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> checks = {
      "orthogonality", "resolution", "normalization", "frame",
      "cp_positivity", "reproduce",  "dilation",      "minimality",
      "cuntz",         "bijection",  "hermite_gram",  "sun_reln"};
  return checks;
}

std::vector<std::string> default_checks(const std::string& family) {
  // Engine checks on the cuntz family need the small-D family form; the
  // default config (D = 1000) runs the representation-level checks.
  if (family == "cuntz") return {"cuntz", "bijection"};
  return {"orthogonality", "resolution", "normalization", "frame",
          "cp_positivity", "reproduce",  "dilation",      "minimality"};
}

SuiteConfig parse_config(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  SuiteConfig cfg;
  bool checks_given = false;
  for (const auto& [key, value] : doc.items()) {
    if (key == "family") {
      if (!value.is_string()) throw ConfigError("family: expected a string");
      cfg.family = value.get<std::string>();
    } else if (key == "family_params") {
      if (!value.is_object()) throw ConfigError("family_params: expected an object");
      for (const auto& [pk, pv] : value.items()) {
        if (!pv.is_number()) throw ConfigError("family_params." + pk + ": expected a number");
        cfg.family_params[pk] = pv.get<double>();
      }
    } else if (key == "checks") {
      if (!value.is_array()) throw ConfigError("checks: expected an array of strings");
      checks_given = true;
      for (const auto& c : value) {
        if (!c.is_string()) throw ConfigError("checks: expected an array of strings");
        cfg.checks.push_back(c.get<std::string>());
      }
    } else if (key == "tolerance") {
      if (!value.is_number()) throw ConfigError("tolerance: expected a number");
      cfg.tolerance = value.get<double>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !value.is_number_integer())
        throw ConfigError("seed: expected an integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "output_path") {
      if (!value.is_string()) throw ConfigError("output_path: expected a string");
      cfg.output_path = value.get<std::string>();
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  // An absent checks key selects the family defaults; an explicitly empty
  // list stays empty and yields an empty, passing report.
  if (!checks_given) cfg.checks = default_checks(cfg.family);
  validate_config(cfg);
  return cfg;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  validate_config(cfg);

  Context ctx(cfg);
  SuiteReport report;
  report.artifact_version = kVersion;
  report.seed = cfg.seed;
  report.config = cfg;

  for (const std::string& name : cfg.checks) {
    CheckResult res;
    if (name == "orthogonality")
      res = check_orthogonality(ctx);
    else if (name == "resolution")
      res = check_resolution(ctx);
    else if (name == "normalization")
      res = check_normalization(ctx);
    else if (name == "frame")
      res = check_frame(ctx);
    else if (name == "cp_positivity")
      res = check_cp_positivity(ctx);
    else if (name == "reproduce")
      res = check_reproduce(ctx);
    else if (name == "dilation")
      res = check_dilation(ctx, 20);
    else if (name == "minimality")
      res = check_minimality(ctx);
    else if (name == "cuntz")
      res = check_cuntz(ctx);
    else if (name == "bijection")
      res = check_bijection(ctx);
    else if (name == "hermite_gram")
      res = check_hermite_gram(ctx);
    else
      res = check_sun_reln(ctx);
    report.all_pass = report.all_pass && res.pass;
    report.checks.push_back(std::move(res));
  }
  return report;
}

std::string emit_report(const SuiteReport& rep, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "check,defect,bound,pass,nodes_used,wall_time_ms,statistical_error\n";
    for (const auto& c : rep.checks)
      out << csv_field(c.name) << ',' << fmt_real(c.defect) << ',' << fmt_real(c.bound) << ','
          << (c.pass ? "true" : "false") << ',' << c.nodes_used << ','
          << fmt_real(c.wall_time_ms) << ',' << fmt_real(c.statistical_error) << '\n';
    return out.str();
  }
  out << "{\n";
  out << "  \"artifact_version\": \"" << json_escape(rep.artifact_version) << "\",\n";
  out << "  \"seed\": " << rep.seed << ",\n";
  out << "  \"family\": \"" << json_escape(rep.config.family) << "\",\n";
  out << "  \"family_params\": {";
  bool first = true;
  for (const auto& [k, v] : rep.config.family_params) {
    out << (first ? "" : ", ") << '"' << json_escape(k) << "\": " << fmt_real(v);
    first = false;
  }
  out << "},\n";
  out << "  \"tolerance\": " << fmt_real(rep.config.tolerance) << ",\n";
  out << "  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    out << "    {\"name\": \"" << json_escape(c.name) << "\", \"defect\": " << fmt_real(c.defect)
        << ", \"bound\": " << fmt_real(c.bound) << ", \"pass\": " << (c.pass ? "true" : "false")
        << ", \"nodes_used\": " << c.nodes_used
        << ", \"wall_time_ms\": " << fmt_real(c.wall_time_ms)
        << ", \"statistical_error\": " << fmt_real(c.statistical_error) << "}"
        << (i + 1 < rep.checks.size() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"all_pass\": " << (rep.all_pass ? "true" : "false") << "\n";
  out << "}\n";
  return out.str();
}

void write_report_file(const SuiteReport& rep, ReportFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << emit_report(rep, format);
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace mvcs
