// colligate: build, validate, evaluate and certify unitary-colligation
// realizations; scan determinantal zero sets and boundary behavior.

#include "colligate/acceptance.hpp"
#include "colligate/boundary.hpp"
#include "colligate/colligation_io.hpp"
#include "colligate/evaluate.hpp"
#include "colligate/numerics.hpp"
#include "colligate/realizations.hpp"
#include "colligate/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace colligate;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

// --- small utilities --------------------------------------------------------

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::uint64_t fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "unreadable";
  std::ostringstream ss;
  ss << in.rdbuf();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a_digest(ss.str())));
  return buf;
}

// Complex literal: "a", "a+bi", "a-bi", "bi", "i"; pairs "a,b" where allowed.
Complex parse_complex(const std::string& text, bool allow_pair = false) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw ParseError("empty complex literal");

  if (allow_pair) {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
      try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
      } catch (const std::exception&) {
        throw ParseError("bad complex pair '" + text + "'");
      }
    }
  }

  if (s.back() == 'i' || s.back() == 'I') {
    s.pop_back();
    if (s.empty() || s == "+") return {0.0, 1.0};
    if (s == "-") return {0.0, -1.0};
    // Split at the sign separating real and imaginary parts (if any),
    // skipping exponent signs.
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        try {
          const double re = std::stod(s.substr(0, k));
          const std::string imtext = s.substr(k);
          const double im = (imtext == "+") ? 1.0 : (imtext == "-") ? -1.0 : std::stod(imtext);
          return {re, im};
        } catch (const std::exception&) {
          throw ParseError("bad complex literal '" + text + "'");
        }
      }
    }
    try {
      return {0.0, std::stod(s)};
    } catch (const std::exception&) {
      throw ParseError("bad complex literal '" + text + "'");
    }
  }
  try {
    std::size_t used = 0;
    const double re = std::stod(s, &used);
    if (used != s.size()) throw ParseError("bad complex literal '" + text + "'");
    return {re, 0.0};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad complex literal '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Comma-separated coordinates, each a complex literal in a+bi form.
Vector parse_point(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  Vector z(static_cast<Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k)
    z(static_cast<Index>(k)) = parse_complex(parts[k]);
  return z;
}

// Matrices '|'-separated, rows ';'-separated, entries comma-separated.
NCPoint parse_nc_point(const std::string& text) {
  NCPoint x;
  for (const std::string& mtext : split(text, '|')) {
    const std::vector<std::string> rows = split(mtext, ';');
    const Index n = static_cast<Index>(rows.size());
    Matrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      const std::vector<std::string> entries = split(rows[static_cast<std::size_t>(i)], ',');
      if (static_cast<Index>(entries.size()) != n)
        throw ParseError("nc point: matrix rows must be square (" + mtext + ")");
      for (Index j = 0; j < n; ++j)
        m(i, j) = parse_complex(entries[static_cast<std::size_t>(j)]);
    }
    x.blocks.push_back(std::move(m));
  }
  x.validate();
  return x;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json point_json(const PointVariant& at) {
  if (const auto* z = std::get_if<Vector>(&at)) return vector_json(*z);
  json out = json::array();
  for (const Matrix& b : std::get<NCPoint>(at).blocks) out.push_back(matrix_json(b));
  return out;
}

struct GlobalOptions {
  double tol_rank = 1e-10;
  double tol_residual = 1e-8;
  double margin = 1e-6;
  std::uint64_t seed = 2024;
  std::string out_path;
  std::string format = "json";

  ToleranceConfig tolerances() const {
    ToleranceConfig t;
    t.rank_tol = tol_rank;
    t.residual_tol = tol_residual;
    t.domain_margin = margin;
    t.validate();
    return t;
  }
};

json report_envelope(const GlobalOptions& opts, const std::string& command,
                     const std::string& input_path = {}) {
  json j;
  j["tool"] = "colligate";
  j["version"] = kVersion;
  j["command"] = command;
  j["seed"] = opts.seed;
  j["tolerances"] = {{"rank_tol", opts.tol_rank},
                     {"residual_tol", opts.tol_residual},
                     {"domain_margin", opts.margin}};
  if (!input_path.empty()) j["input_digest"] = file_digest(input_path);
  return j;
}

void emit(const GlobalOptions& opts, const std::string& text) {
  if (opts.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.out_path, std::ios::binary);
  if (!out) throw ParseError(opts.out_path + ": cannot open for writing");
  out << text;
}

void emit_json(const GlobalOptions& opts, const json& j) { emit(opts, j.dump(2) + "\n"); }

// --- scan helpers -----------------------------------------------------------

struct Range {
  double lo = -0.9;
  double hi = 0.9;
};

Range parse_range(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw ParseError("range: expected lo:hi");
  try {
    Range r{std::stod(parts[0]), std::stod(parts[1])};
    if (!(r.lo < r.hi)) throw ParseError("range: requires lo < hi");
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("range: expected numeric lo:hi");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transfer-function realizations: evaluation, zero sets as spectra, "
               "boundary analysis"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--tol-rank", opts.tol_rank, "relative singular-value cutoff");
  app.add_option("--tol-residual", opts.tol_residual, "certificate residual threshold");
  app.add_option("--margin", opts.margin, "strict-interior domain margin");
  app.add_option("--seed", opts.seed, "seed for randomized subcommands");
  app.add_option("--out,-o", opts.out_path, "output path (default stdout)");
  auto* format_opt = app.add_option("--format", opts.format, "output format: json or csv")
                         ->check(CLI::IsMember({"json", "csv"}));

  // generate ----------------------------------------------------------------
  auto* generate = app.add_subcommand("generate", "write a bundled or random colligation");
  std::string gen_kind, gen_alpha = "0.5", gen_beta = "0.5", gen_partition, gen_pencil = "row";
  Index gen_j = 1, gen_d = 2, gen_h = 1;
  generate->add_option("kind", gen_kind,
                       "famous-example | f-alpha-beta | ball-coordinate | random")
      ->required();
  generate->add_option("--alpha", gen_alpha, "complex a+bi or re,im");
  generate->add_option("--beta", gen_beta, "complex a+bi or re,im");
  generate->add_option("--j", gen_j, "coordinate index (ball-coordinate)");
  generate->add_option("--d", gen_d, "number of variables");
  generate->add_option("--dim-h", gen_h, "auxiliary-space dimension (matrix-ball random)");
  generate->add_option("--partition", gen_partition, "comma-separated block dims (random)");
  generate->add_option("--pencil", gen_pencil, "row | diag (matrix-ball random)");

  // validate ------------------------------------------------------------------
  auto* validate_cmd = app.add_subcommand("validate", "isometry/coisometry defects");
  std::string val_path;
  validate_cmd->add_option("file", val_path, "colligation JSON")->required();

  // eval ----------------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "evaluate at scalar points");
  std::string eval_path, eval_point_text, eval_points_file;
  eval_cmd->add_option("file", eval_path, "colligation JSON")->required();
  eval_cmd->add_option("--point", eval_point_text, "comma-separated coords, each a+bi");
  eval_cmd->add_option("--points-file", eval_points_file, "JSON array or CSV of points");
  eval_cmd->footer("JSON records {point, value, condition, warnings}; --format csv emits\n"
                   "columns re_0,im_0,...,re_f,im_f,condition,warnings");

  // eval-nc ---------------------------------------------------------------------
  auto* evalnc_cmd = app.add_subcommand("eval-nc", "evaluate at matrix tuples");
  std::string evalnc_path, evalnc_point, evalnc_points_file;
  evalnc_cmd->add_option("file", evalnc_path, "colligation JSON")->required();
  evalnc_cmd->add_option("--nc-point", evalnc_point,
                         "matrices '|'-separated, rows ';'-separated, entries a+bi");
  evalnc_cmd->add_option("--points-file", evalnc_points_file,
                         "JSON array of matrix tuples (rows of [re,im] entries)");

  // zeros scan ------------------------------------------------------------------
  auto* zeros_cmd = app.add_subcommand("zeros", "determinantal zero sets");
  auto* zscan = zeros_cmd->add_subcommand("scan", "pencil roots along an axis grid");
  std::string zs_path, zs_range_text = "-0.9:0.9";
  Index zs_axis = 0, zs_grid = 101;
  std::vector<std::string> zs_fixed;
  Index zs_vary = -1;
  zscan->add_option("file", zs_path, "colligation JSON")->required();
  zscan->add_option("--axis", zs_axis, "swept coordinate (0-based)");
  zscan->add_option("--grid", zs_grid, "grid point count");
  zscan->add_option("--range", zs_range_text, "real sweep range lo:hi");
  zscan->add_option("--vary", zs_vary, "root coordinate (default: first other axis)");
  zscan->add_option("--fix", zs_fixed, "fixed coordinate as idx=value (repeatable)");
  zscan->footer("CSV columns: re_0,im_0,...,re_{d-1},im_{d-1},in_domain,abs_f,sigma_min\n"
                "(--format json emits the same rows as records)");

  // spectrum ----------------------------------------------------------------------
  auto* spectrum_cmd = app.add_subcommand("spectrum", "spectral membership residual");
  std::string sp_path, sp_point, sp_nc_point;
  spectrum_cmd->add_option("file", sp_path, "colligation JSON")->required();
  spectrum_cmd->add_option("--point", sp_point, "scalar point");
  spectrum_cmd->add_option("--nc-point", sp_nc_point, "matrix tuple");

  // certify -------------------------------------------------------------------------
  auto* certify_cmd = app.add_subcommand("certify", "two-sided zero certificate");
  std::string ct_path, ct_point, ct_nc_point, ct_direction;
  certify_cmd->add_option("file", ct_path, "colligation JSON")->required();
  certify_cmd->add_option("--point", ct_point, "scalar point");
  certify_cmd->add_option("--nc-point", ct_nc_point, "matrix tuple");
  certify_cmd->add_option("--direction", ct_direction, "annihilated direction y");

  // boundary ---------------------------------------------------------------------
  auto* boundary_cmd = app.add_subcommand("boundary", "radial limits and portions");
  auto* bradial = boundary_cmd->add_subcommand("radial", "radial values at one point");
  std::string br_path, br_point, br_nc_point;
  int br_kmax = 20;
  bradial->add_option("file", br_path, "colligation JSON")->required();
  bradial->add_option("--point", br_point, "boundary point");
  bradial->add_option("--nc-point", br_nc_point, "boundary matrix tuple");
  bradial->add_option("--kmax", br_kmax, "radii r_k = 1 - 2^-k, k <= kmax");

  auto* bscan = boundary_cmd->add_subcommand("scan", "torus / sphere boundary grid");
  std::string bs_path;
  Index bs_grid = 50;
  int bs_kmax = 40;
  bscan->add_option("file", bs_path, "colligation JSON")->required();
  bscan->add_option("--grid", bs_grid, "per-axis count (torus) or sample count (sphere)");
  bscan->add_option("--kmax", bs_kmax, "radial schedule length");
  bscan->footer("CSV columns: index,point,converged,abs_limit,sigma_min,bp_class,portion");

  auto* bclass = boundary_cmd->add_subcommand("classify", "iso/coiso/uni portion membership");
  std::string bc_path, bc_point, bc_nc_point;
  bclass->add_option("file", bc_path, "colligation JSON")->required();
  bclass->add_option("--point", bc_point, "boundary point");
  bclass->add_option("--nc-point", bc_nc_point, "boundary matrix tuple");

  // suite -------------------------------------------------------------------------
  auto* suite_cmd = app.add_subcommand("suite", "run the full acceptance battery");

  // Global flags may appear after any subcommand name.
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const ToleranceConfig tol = opts.tolerances();

    if (*generate) {
      Colligation v;
      if (gen_kind == "famous-example") {
        v = build_famous_example();
      } else if (gen_kind == "f-alpha-beta") {
        v = build_f_alpha_beta(parse_complex(gen_alpha, true), parse_complex(gen_beta, true));
      } else if (gen_kind == "ball-coordinate") {
        v = build_ball_coordinate(gen_j, gen_d);
      } else if (gen_kind == "random") {
        StateStructure structure;
        if (!gen_partition.empty()) {
          PartitionStructure p;
          for (const std::string& s : split(gen_partition, ','))
            p.dims.push_back(static_cast<Index>(std::stoll(s)));
          structure = std::move(p);
        } else if (gen_pencil == "row") {
          structure = MatrixBallStructure{QPencil::row(gen_d), gen_h};
        } else if (gen_pencil == "diag") {
          structure = MatrixBallStructure{QPencil::diag(gen_d), gen_h};
        } else {
          throw ParseError("generate random: pencil must be row or diag");
        }
        v = build_random(std::move(structure), opts.seed);
      } else {
        throw ParseError("generate: unknown kind '" + gen_kind + "'");
      }
      emit(opts, save(v));
      return 0;
    }

    if (*validate_cmd) {
      const Colligation v = load_file(val_path);
      const ValidationReport rep = validate(v, tol);
      json j = report_envelope(opts, "validate", val_path);
      j["name"] = v.name;
      j["isometry_defect"] = rep.isometry_defect;
      j["coisometry_defect"] = rep.coisometry_defect;
      j["d_norm"] = rep.d_norm;
      j["is_isometry"] = rep.is_isometry;
      j["is_coisometry"] = rep.is_coisometry;
      j["is_unitary"] = rep.is_unitary;
      emit_json(opts, j);
      return 0;
    }

    if (*eval_cmd) {
      const Colligation v = load_file(eval_path);
      std::vector<Vector> points;
      if (!eval_point_text.empty()) points.push_back(parse_point(eval_point_text));
      if (!eval_points_file.empty()) {
        std::ifstream in(eval_points_file);
        if (!in) throw ParseError(eval_points_file + ": cannot open");
        if (eval_points_file.size() > 4 &&
            eval_points_file.substr(eval_points_file.size() - 4) == ".csv") {
          // CSV columns re_1, im_1, ..., re_d, im_d; header optional.
          std::string line;
          while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto cells = split(line, ',');
            bool numeric = true;
            std::vector<double> vals;
            for (const std::string& c : cells) {
              try {
                vals.push_back(std::stod(c));
              } catch (const std::exception&) {
                numeric = false;
                break;
              }
            }
            if (!numeric || vals.size() % 2 != 0) continue;
            Vector z(static_cast<Index>(vals.size() / 2));
            for (Index k = 0; k < z.size(); ++k)
              z(k) = Complex(vals[static_cast<std::size_t>(2 * k)],
                             vals[static_cast<std::size_t>(2 * k + 1)]);
            points.push_back(std::move(z));
          }
        } else {
          json arr = json::parse(in);
          for (const json& pj : arr) {
            Vector z(static_cast<Index>(pj.size()));
            for (Index k = 0; k < z.size(); ++k) {
              const json& c = pj[static_cast<std::size_t>(k)];
              z(k) = Complex(c[0].get<double>(), c[1].get<double>());
            }
            points.push_back(std::move(z));
          }
        }
      }
      if (points.empty()) throw ParseError("eval: provide --point or --points-file");

      const std::string fmt = format_opt->count() ? opts.format : "json";
      if (fmt == "csv") {
        std::ostringstream csv;
        csv << "# colligate " << kVersion << " eval seed=" << opts.seed
            << " digest=" << file_digest(eval_path) << "\n";
        const Index d = points.front().size();
        for (Index k = 0; k < d; ++k) csv << "re_" << k << ",im_" << k << ",";
        csv << "re_f,im_f,condition,warnings\n";
        for (const Vector& z : points) {
          for (Index k = 0; k < z.size(); ++k)
            csv << format_double(z(k).real()) << "," << format_double(z(k).imag()) << ",";
          try {
            const EvalResult r = eval_point(v, z, tol);
            csv << format_double(r.scalar().real()) << "," << format_double(r.scalar().imag())
                << "," << format_double(r.condition) << "," << r.warnings.size() << "\n";
          } catch (const DomainError&) {
            csv << "nan,nan,nan,domain_error\n";
          }
        }
        emit(opts, csv.str());
        return 0;
      }

      json records = json::array();
      for (const Vector& z : points) {
        json rec;
        rec["point"] = vector_json(z);
        try {
          const EvalResult r = eval_point(v, z, tol);
          rec["value"] = complex_json(r.scalar());
          rec["condition"] = r.condition;
          rec["warnings"] = r.warnings;
        } catch (const DomainError& e) {
          rec["error"] = e.what();
        }
        records.push_back(std::move(rec));
      }
      json j = report_envelope(opts, "eval", eval_path);
      j["records"] = std::move(records);
      emit_json(opts, j);
      return 0;
    }

    if (*evalnc_cmd) {
      const Colligation loaded = load_file(evalnc_path);
      const Colligation v = loaded.is_partition() ? to_matrix_ball(loaded) : loaded;
      std::vector<NCPoint> points;
      if (!evalnc_point.empty()) points.push_back(parse_nc_point(evalnc_point));
      if (!evalnc_points_file.empty()) {
        std::ifstream in(evalnc_points_file);
        if (!in) throw ParseError(evalnc_points_file + ": cannot open");
        json arr = json::parse(in);
        for (const json& pj : arr) {
          NCPoint x;
          for (const json& mj : pj) {
            const Index n = static_cast<Index>(mj.size());
            Matrix m(n, n);
            for (Index i = 0; i < n; ++i)
              for (Index k = 0; k < n; ++k) {
                const json& c = mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                m(i, k) = Complex(c[0].get<double>(), c[1].get<double>());
              }
            x.blocks.push_back(std::move(m));
          }
          x.validate();
          points.push_back(std::move(x));
        }
      }
      if (points.empty()) throw ParseError("eval-nc: provide --nc-point or --points-file");

      json records = json::array();
      for (const NCPoint& x : points) {
        json rec;
        rec["point"] = point_json(PointVariant(x));
        try {
          const EvalResult r = eval_nc(v, x, tol);
          rec["value"] = matrix_json(r.value);
          rec["condition"] = r.condition;
          rec["warnings"] = r.warnings;
        } catch (const DomainError& e) {
          rec["error"] = e.what();
        }
        records.push_back(std::move(rec));
      }
      json j = report_envelope(opts, "eval-nc", evalnc_path);
      j["records"] = std::move(records);
      emit_json(opts, j);
      return 0;
    }

    if (*zscan) {
      const Colligation v = load_file(zs_path);
      const PartitionStructure& p = v.partition();
      const Range range = parse_range(zs_range_text);
      const Index d = p.arity();
      if (zs_axis < 0 || zs_axis >= d) throw ParseError("zeros scan: --axis out of range");

      Vector base = Vector::Zero(d);
      std::vector<bool> constrained(static_cast<std::size_t>(d), false);
      constrained[static_cast<std::size_t>(zs_axis)] = true;
      for (const std::string& f : zs_fixed) {
        const auto eq = f.find('=');
        if (eq == std::string::npos) throw ParseError("zeros scan: --fix expects idx=value");
        const Index idx = static_cast<Index>(std::stoll(f.substr(0, eq)));
        if (idx < 0 || idx >= d) throw ParseError("zeros scan: --fix index out of range");
        base(idx) = parse_complex(f.substr(eq + 1));
        constrained[static_cast<std::size_t>(idx)] = true;
      }
      Index vary = zs_vary;
      if (vary < 0) {
        for (Index k = 0; k < d; ++k)
          if (!constrained[static_cast<std::size_t>(k)]) {
            vary = k;
            break;
          }
      }
      if (vary < 0 || vary >= d || vary == zs_axis)
        throw ParseError("zeros scan: no free coordinate to vary");
      for (Index k = 0; k < d; ++k)
        if (k != zs_axis && k != vary && !constrained[static_cast<std::size_t>(k)])
          throw ParseError("zeros scan: coordinate " + std::to_string(k) +
                           " needs --fix for d > 2");

      std::ostringstream csv;
      csv << "# colligate " << kVersion << " zeros scan seed=" << opts.seed
          << " digest=" << file_digest(zs_path) << "\n";
      for (Index k = 0; k < d; ++k) csv << "re_" << k << ",im_" << k << ",";
      csv << "in_domain,abs_f,sigma_min\n";
      json records = json::array();
      const std::string fmt = format_opt->count() ? opts.format : "csv";

      for (Index g = 0; g < zs_grid; ++g) {
        const double x =
            range.lo + (range.hi - range.lo) * static_cast<double>(g) /
                           static_cast<double>(std::max<Index>(1, zs_grid - 1));
        Vector z = base;
        z(zs_axis) = Complex(x, 0.0);
        const PencilLine line = det_pencil_roots(v, z, vary, tol);
        if (line.degenerate) continue;
        for (const Complex& root : line.roots) {
          Vector full = z;
          full(vary) = root;
          const double norm = domain_norm(v, PointVariant(full));
          const bool interior = norm <= 1.0 - tol.domain_margin;
          double absf = std::numeric_limits<double>::quiet_NaN();
          if (interior)
            absf = std::abs(eval_interior(v, PointVariant(full), tol).scalar());
          const double smin = sigma_min(v.D.adjoint() - delta_matrix(p, full));
          if (fmt == "csv") {
            for (Index k = 0; k < d; ++k)
              csv << format_double(full(k).real()) << "," << format_double(full(k).imag())
                  << ",";
            csv << (interior ? 1 : 0) << "," << format_double(absf) << ","
                << format_double(smin) << "\n";
          } else {
            json rec;
            rec["point"] = vector_json(full);
            rec["in_domain"] = interior;
            if (interior) rec["abs_f"] = absf;
            rec["sigma_min"] = smin;
            records.push_back(std::move(rec));
          }
        }
      }
      if (fmt == "csv") {
        emit(opts, csv.str());
      } else {
        json j = report_envelope(opts, "zeros scan", zs_path);
        j["records"] = std::move(records);
        emit_json(opts, j);
      }
      return 0;
    }

    if (*spectrum_cmd) {
      const Colligation v = load_file(sp_path);
      PointVariant at = sp_nc_point.empty() ? PointVariant(parse_point(sp_point))
                                            : PointVariant(parse_nc_point(sp_nc_point));
      const Colligation& target =
          (!sp_nc_point.empty() && v.is_partition()) ? to_matrix_ball(v) : v;
      const SpectralResidual res = spectral_residual(target, at, tol);
      json j = report_envelope(opts, "spectrum", sp_path);
      j["point"] = point_json(at);
      j["sigma_min"] = res.sigma_min;
      j["kernel_dim"] = res.kernel_dim;
      j["kernel"] = matrix_json(res.kernel);
      j["degenerate_shape"] = res.degenerate_shape;
      emit_json(opts, j);
      return 0;
    }

    if (*certify_cmd) {
      const Colligation loaded = load_file(ct_path);
      PointVariant at = ct_nc_point.empty() ? PointVariant(parse_point(ct_point))
                                            : PointVariant(parse_nc_point(ct_nc_point));
      const Colligation v =
          (!ct_nc_point.empty() && loaded.is_partition()) ? to_matrix_ball(loaded) : loaded;
      std::optional<Vector> y;
      if (!ct_direction.empty()) y = parse_point(ct_direction);
      const ZeroCertificate cert = certify(v, at, y, tol);
      json j = report_envelope(opts, "certify", ct_path);
      j["point"] = point_json(at);
      j["direction"] = vector_json(cert.y);
      j["f_residual"] = cert.f_residual;
      j["spectral_residual"] = cert.spectral_residual;
      j["kernel_dim"] = cert.spectral.kernel_dim;
      j["witness"] = {{"L", vector_json(cert.wit.L)},
                      {"v", vector_json(cert.wit.v)},
                      {"c_star_v", vector_json(cert.wit.c_star_v)},
                      {"residual", cert.wit.residual}};
      j["forward_only"] = cert.forward_only;
      j["verdict"] = to_string(cert.verdict);
      emit_json(opts, j);
      return cert.verdict == Verdict::mismatch ? 2 : 0;
    }

    if (*bradial) {
      const Colligation loaded = load_file(br_path);
      PointVariant at = br_nc_point.empty() ? PointVariant(parse_point(br_point))
                                            : PointVariant(parse_nc_point(br_nc_point));
      const Colligation v =
          (!br_nc_point.empty() && loaded.is_partition()) ? to_matrix_ball(loaded) : loaded;
      const RadialReport rep = radial_values(v, at, RadialSchedule::dyadic(br_kmax), tol);
      json j = report_envelope(opts, "boundary radial", br_path);
      j["point"] = point_json(rep.point);
      json values = json::array();
      for (const Matrix& m : rep.values) values.push_back(matrix_json(m));
      j["values"] = std::move(values);
      j["diffs"] = rep.diffs;
      j["converged"] = rep.converged;
      if (rep.converged) {
        j["limit"] = matrix_json(rep.limit);
        j["tail_estimate"] = rep.tail_estimate;
        j["iso_defect"] = rep.iso_defect;
        j["coiso_defect"] = rep.coiso_defect;
      }
      j["bp_class"] = to_string(rep.bp_class);
      j["boundary_zero"] = rep.boundary_zero;
      emit_json(opts, j);
      return 0;
    }

    if (*bscan) {
      const Colligation v = load_file(bs_path);
      const RadialSchedule sched = RadialSchedule::dyadic(bs_kmax);
      std::ostringstream csv;
      csv << "# colligate " << kVersion << " boundary scan seed=" << opts.seed
          << " digest=" << file_digest(bs_path) << "\n";
      csv << "index,point,converged,abs_limit,sigma_min,bp_class,portion\n";
      Index counterexamples = 0;

      auto emit_row = [&](Index idx, const Vector& z) {
        RadialReport rep;
        bool domain_ok = true;
        try {
          rep = radial_values(v, PointVariant(z), sched, tol);
        } catch (const DomainError&) {
          domain_ok = false;
        }
        csv << idx << ",\"";
        for (Index k = 0; k < z.size(); ++k)
          csv << (k ? ";" : "") << format_double(z(k).real())
              << (z(k).imag() < 0.0 ? "-" : "+") << format_double(std::abs(z(k).imag())) << "i";
        csv << "\",";
        if (!domain_ok) {
          csv << "0,nan,nan,off_boundary,none\n";
          return;
        }
        const double absf =
            rep.converged ? operator_norm(rep.limit) : std::numeric_limits<double>::quiet_NaN();
        double smin = std::numeric_limits<double>::quiet_NaN();
        try {
          smin = spectral_residual(v, rep.point, tol).sigma_min;
        } catch (const ShapeError&) {
        }
        const BoundaryPortion portion = classify_boundary_point(v, rep.point);
        if (rep.converged && std::isfinite(smin)) {
          // Detected boundary zeros and non-(co)isometric values on the
          // matching portion must land in the approximate point spectrum.
          const bool iso_side = portion == BoundaryPortion::iso || portion == BoundaryPortion::uni;
          const bool coiso_side =
              portion == BoundaryPortion::coiso || portion == BoundaryPortion::uni;
          const bool obligated = rep.boundary_zero || (iso_side && rep.iso_defect > 1e-6) ||
                                 (coiso_side && rep.coiso_defect > 1e-6);
          if (obligated && smin > 1e-6) ++counterexamples;
        }
        csv << (rep.converged ? 1 : 0) << "," << format_double(absf) << ","
            << format_double(smin) << "," << to_string(rep.bp_class) << ","
            << to_string(portion) << "\n";
      };

      if (v.is_partition()) {
        // Two-angle torus grid; for d > 2 the trailing coordinates share the
        // second angle so the scan stays quadratic in --grid.
        const Index d = v.arity();
        Index idx = 0;
        for (Index a = 0; a < bs_grid; ++a) {
          for (Index b = 0; b < bs_grid; ++b) {
            Vector z(d);
            const double ta = 2.0 * M_PI * static_cast<double>(a) / static_cast<double>(bs_grid);
            const double tb = 2.0 * M_PI * static_cast<double>(b) / static_cast<double>(bs_grid);
            z(0) = Complex(std::cos(ta), std::sin(ta));
            for (Index k = 1; k < d; ++k) z(k) = Complex(std::cos(tb), std::sin(tb));
            emit_row(idx++, z);
          }
        }
      } else {
        Rng rng(opts.seed);
        for (Index i = 0; i < bs_grid; ++i) {
          Vector z(v.arity());
          for (Index k = 0; k < z.size(); ++k) z(k) = rng.complex_gaussian();
          const double q = domain_norm(v, PointVariant(z));
          if (q <= 0.0) continue;
          emit_row(i, Vector(z / q));
        }
      }
      emit(opts, csv.str());
      if (counterexamples > 0) {
        std::cerr << "boundary scan: " << counterexamples
                  << " containment counterexample(s) detected\n";
        return 2;
      }
      return 0;
    }

    if (*bclass) {
      const Colligation loaded = load_file(bc_path);
      PointVariant at = bc_nc_point.empty() ? PointVariant(parse_point(bc_point))
                                            : PointVariant(parse_nc_point(bc_nc_point));
      const Colligation v =
          (!bc_nc_point.empty() && loaded.is_partition()) ? to_matrix_ball(loaded) : loaded;
      json j = report_envelope(opts, "boundary classify", bc_path);
      j["point"] = point_json(at);
      j["portion"] = to_string(classify_boundary_point(v, at));
      j["domain_norm"] = domain_norm(v, at);
      emit_json(opts, j);
      return 0;
    }

    if (*suite_cmd) {
      const auto results = acceptance::run_all(opts.seed);
      emit(opts, acceptance::format_table(results));
      return acceptance::all_passed(results) ? 0 : 2;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
