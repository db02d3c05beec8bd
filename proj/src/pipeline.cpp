#include "jspectra/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jspectra/krein.hpp"
#include "jspectra/mmio.hpp"
#include "jspectra/qnr.hpp"
#include "jspectra/vareig.hpp"

namespace jspectra {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

}  // namespace

Json& Json::set(const std::string& key, Json v) {
    std::get<Object>(value_).emplace_back(key, std::move(v));
    return *this;
}

Json& Json::push(Json v) {
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
}

void Json::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (value_.index()) {
        case 0: out += "null"; break;
        case 1: out += std::get<bool>(value_) ? "true" : "false"; break;
        case 2: {
            double d = std::get<double>(value_);
            out += std::isfinite(d) ? fmt17(d) : "null";
            break;
        }
        case 3: out += std::to_string(std::get<std::int64_t>(value_)); break;
        case 4: escape_into(out, std::get<std::string>(value_)); break;
        case 5: {
            const Array& arr = std::get<Array>(value_);
            if (arr.empty()) {
                out += "[]";
                break;
            }
            out += "[\n";
            for (std::size_t i = 0; i < arr.size(); ++i) {
                out += pad_in;
                arr[i].write(out, indent, depth + 1);
                if (i + 1 < arr.size()) out += ',';
                out += '\n';
            }
            out += pad + "]";
            break;
        }
        case 6: {
            const Object& obj = std::get<Object>(value_);
            if (obj.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < obj.size(); ++i) {
                out += pad_in;
                escape_into(out, obj[i].first);
                out += ": ";
                obj[i].second.write(out, indent, depth + 1);
                if (i + 1 < obj.size()) out += ',';
                out += '\n';
            }
            out += pad + "}";
            break;
        }
    }
}

std::string Json::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

ScalarFn parse_scalar_fn(const std::string& text) {
    auto split = [](const std::string& s) {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : s) {
            if (c == ':') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        return parts;
    };
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty())
            throw Error(ErrorCode::ParseError, "bad number '" + s + "' in '" + text + "'");
        return v;
    };

    std::vector<std::string> parts = split(text);
    const std::string& kind = parts[0];
    if (kind == "const" && parts.size() == 2) {
        double v = num(parts[1]);
        return [v](double) { return v; };
    }
    if (kind == "step" && parts.size() == 4) {
        double at = num(parts[1]), left = num(parts[2]), right = num(parts[3]);
        return [at, left, right](double s) { return s < at ? left : right; };
    }
    if (kind == "sin" && parts.size() == 4) {
        double amp = num(parts[1]), freq = num(parts[2]), off = num(parts[3]);
        return [amp, freq, off](double s) { return amp * std::sin(freq * M_PI * s) + off; };
    }
    if (kind == "table" && parts.size() == 2) {
        std::vector<double> values;
        std::stringstream ss(parts[1]);
        std::string item;
        while (std::getline(ss, item, ',')) values.push_back(num(item));
        if (values.empty()) throw Error(ErrorCode::ParseError, "empty table in '" + text + "'");
        return [values](double s) {
            auto idx = static_cast<std::size_t>(s * static_cast<double>(values.size()));
            if (idx >= values.size()) idx = values.size() - 1;
            return values[idx];
        };
    }
    throw Error(ErrorCode::ParseError, "unknown function preset '" + text + "'");
}

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::vector<std::string>& allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const auto& k : allowed) known = known || it.key() == k;
        if (!known)
            throw Error(ErrorCode::ParseError, "unknown key '" + it.key() + "' in " + where);
    }
}

}  // namespace

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, path + ": manifest must be an object");
    reject_unknown(doc, {"matrices", "example", "options"}, "manifest");

    Manifest m;
    if (doc.contains("matrices")) {
        const json& mats = doc["matrices"];
        reject_unknown(mats, {"a", "b", "d"}, "matrices");
        if (!mats.contains("a") || !mats.contains("b") || !mats.contains("d"))
            throw Error(ErrorCode::ParseError, path + ": matrices needs a, b and d");
        m.matrices = Manifest::MatrixPaths{mats["a"].get<std::string>(),
                                           mats["b"].get<std::string>(),
                                           mats["d"].get<std::string>()};
    }
    if (doc.contains("example")) {
        const json& ex = doc["example"];
        reject_unknown(ex, {"name", "n", "u", "w", "q", "v"}, "example");
        Manifest::ExampleSpec spec;
        if (!ex.contains("name") || !ex.contains("n"))
            throw Error(ErrorCode::ParseError, path + ": example needs name and n");
        spec.name = ex["name"].get<std::string>();
        spec.n = ex["n"].get<int>();
        if (ex.contains("u")) spec.u = ex["u"].get<std::string>();
        if (ex.contains("w")) spec.w = ex["w"].get<std::string>();
        if (ex.contains("q")) spec.q = ex["q"].get<std::string>();
        if (ex.contains("v")) spec.v = ex["v"].get<std::string>();
        m.example = spec;
    }
    if (m.matrices.has_value() == m.example.has_value())
        throw Error(ErrorCode::ParseError, path + ": exactly one of matrices/example required");

    if (doc.contains("options")) {
        const json& opt = doc["options"];
        reject_unknown(opt, {"b_grid", "gamma0", "num_eigs", "seed", "samples"}, "options");
        if (opt.contains("b_grid"))
            m.b_grid = opt["b_grid"].get<std::vector<double>>();
        if (opt.contains("gamma0")) m.gamma0 = opt["gamma0"].get<double>();
        if (opt.contains("num_eigs")) m.num_eigs = opt["num_eigs"].get<int>();
        if (opt.contains("seed")) m.seed = opt["seed"].get<std::uint64_t>();
        if (opt.contains("samples")) m.samples = opt["samples"].get<int>();
    }
    return m;
}

BlockSystem system_from_manifest(const Manifest& manifest, const std::string& base_dir) {
    if (manifest.matrices) {
        auto resolve = [&](const std::string& p) {
            std::filesystem::path fp(p);
            if (fp.is_absolute() || base_dir.empty()) return fp.string();
            return (std::filesystem::path(base_dir) / fp).string();
        };
        Matrix a = mmio::read_matrix(resolve(manifest.matrices->a));
        Matrix b = mmio::read_matrix(resolve(manifest.matrices->b));
        Matrix d = mmio::read_matrix(resolve(manifest.matrices->d));
        return build_system(a, b, d);
    }
    const Manifest::ExampleSpec& spec = *manifest.example;
    if (spec.name == "ex1") {
        Example1Config cfg;
        cfg.n = spec.n;
        cfg.u = parse_scalar_fn(spec.u);
        cfg.w = parse_scalar_fn(spec.w);
        return build_example1(cfg);
    }
    if (spec.name == "ex2") {
        Example2Config cfg;
        cfg.n = spec.n;
        cfg.q = parse_scalar_fn(spec.q);
        cfg.u = parse_scalar_fn(spec.u);
        cfg.v = parse_scalar_fn(spec.v);
        return build_example2(cfg);
    }
    throw Error(ErrorCode::ParseError, "unknown example '" + spec.name + "'");
}

namespace {

Json opt_num(const std::optional<double>& v) {
    if (!v) return Json(nullptr);
    return Json(*v);
}

Json enclosure_json(const EnclosureParams& p) {
    Json out = Json::object();
    out.set("mu", p.mu);
    out.set("mu_minus", opt_num(p.mu_minus));
    out.set("mu_plus", opt_num(p.mu_plus));
    out.set("xi1", p.xi1);
    out.set("xi2", opt_num(p.xi2));
    out.set("xi_minus", p.xi_minus);
    out.set("eta", p.eta);
    out.set("cond_a1", p.condA1);
    out.set("cond_a2", p.condA2);
    out.set("cond_a", p.condA);
    out.set("strict_a", p.strictA);
    out.set("d_unbounded", p.d_unbounded);
    return out;
}

double pair_psd_residual(const BlockSystem& sys, double a, double b) {
    Matrix residual =
        a * Matrix::Identity(sys.n1(), sys.n1()) + b * sys.A - sys.B * sys.B.transpose();
    return sym_eig(residual).min();
}

std::vector<double> sorted_real_above(const std::vector<Complex>& spec, double floor,
                                      double imag_tol) {
    std::vector<double> out;
    for (Complex z : spec)
        if (std::abs(z.imag()) <= imag_tol && z.real() > floor) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

AnalyzeOutcome run_analyze(const Manifest& manifest, const std::string& base_dir,
                           const AnalyzeOptions& options) {
    const Tolerances& tol = Tolerances::global();
    AnalyzeOutcome outcome;
    auto assert_check = [&](bool ok, const std::string& name) {
        if (!ok) {
            outcome.all_passed = false;
            outcome.failures.push_back(name);
        }
        return ok;
    };

    BlockSystem sys = system_from_manifest(manifest, base_dir);
    const double m_norm = norm_M(sys);

    std::vector<double> grid = manifest.b_grid.empty() ? default_b_grid(sys) : manifest.b_grid;
    OptimizedBound best = optimize_bound(sys, grid);
    const EnclosureParams& params = best.params;
    double a_hat = max_ahat_for_bhat(sys, 0.0);
    double psd_residual = pair_psd_residual(sys, best.a, best.b);
    assert_check(psd_residual >= -tol.psd * sys.norm_A() - tol.psd, "bound_psd");

    Json report = Json::object();
    report.set("schema", kReportSchema);
    report.set("version", kToolVersion);
    if (manifest.seed)
        report.set("seed", Json(static_cast<std::int64_t>(*manifest.seed)));
    else
        report.set("seed", Json(nullptr));

    {
        Json system = Json::object();
        system.set("n1", static_cast<std::int64_t>(sys.n1()));
        system.set("n2", static_cast<std::int64_t>(sys.n2()));
        system.set("alpha_minus", sys.alpha_minus);
        system.set("delta_plus", sys.delta_plus);
        system.set("delta_minus", sys.delta_minus);
        system.set("norm_a", sys.norm_A());
        system.set("norm_b", spectral_norm(sys.B));
        system.set("norm_d", sys.norm_D());
        report.set("system", std::move(system));
    }
    {
        Json bound = Json::object();
        bound.set("a", best.a);
        bound.set("b", best.b);
        bound.set("a_hat", a_hat);
        bound.set("b_hat", 0.0);
        bound.set("psd_residual", psd_residual);
        report.set("bound", std::move(bound));
    }
    report.set("enclosure", enclosure_json(params));

    // Spectrum and enclosure verdicts.
    GenEig spec = spectrum_M(sys);
    double max_imag = 0.0;
    bool all_inside = true;
    {
        Json eigs = Json::array();
        for (Complex z : spec.values) {
            bool inside = in_enclosure(z, params);
            all_inside = all_inside && inside;
            max_imag = std::max(max_imag, std::abs(z.imag()));
            Json e = Json::object();
            e.set("re", z.real());
            e.set("im", z.imag());
            e.set("in_enclosure", inside);
            e.set("margin", enclosure_margin(z, params));
            eigs.push(std::move(e));
        }
        Json spectrum = Json::object();
        spectrum.set("eigenvalues", std::move(eigs));
        spectrum.set("nonreal_count", nonreal_count(sys));
        spectrum.set("max_imag", max_imag);
        report.set("spectrum", std::move(spectrum));
    }
    assert_check(all_inside, "enclosure_membership");
    if (params.condA) assert_check(max_imag <= 1e-8 * std::max(1.0, m_norm), "real_spectrum");

    // Variational eigenvalues against the dense oracle.
    double gamma0 = manifest.gamma0 ? *manifest.gamma0 : default_gamma0(params);
    if (!(gamma0 > params.mu))
        throw Error(ErrorCode::IntervalNotAboveMu, "gamma0 must exceed mu");
    std::vector<double> oracle =
        sorted_real_above(spec.values, gamma0, 1e-8 * std::max(1.0, m_norm));
    int kappa = kappa_minus(sys, gamma0);
    int available = static_cast<int>(sys.n1()) - kappa;
    int count = manifest.num_eigs ? std::min(*manifest.num_eigs, available)
                                  : std::min<int>(static_cast<int>(oracle.size()), available);
    VarEigResult var = variational_spectrum(sys, params, gamma0, count);
    {
        Json entries = Json::array();
        bool oracle_match = static_cast<std::size_t>(count) <= oracle.size();
        for (int i = 0; i < count; ++i) {
            double lambda = var.eigenvalues[static_cast<std::size_t>(i)];
            double residual =
                std::abs(s_form(sys, lambda, var.eigenvectors_x[static_cast<std::size_t>(i)]));
            double dist = std::numeric_limits<double>::infinity();
            for (double z : oracle) dist = std::min(dist, std::abs(z - lambda));
            if (static_cast<std::size_t>(i) < oracle.size())
                oracle_match = oracle_match &&
                               std::abs(lambda - oracle[static_cast<std::size_t>(i)]) <=
                                   1e-8 * std::max(1.0, m_norm);
            Json e = Json::object();
            e.set("n", i + 1);
            e.set("lambda", lambda);
            e.set("iterations", var.iterations[static_cast<std::size_t>(i)]);
            e.set("converged", static_cast<bool>(var.converged[static_cast<std::size_t>(i)]));
            e.set("form_residual", residual);
            e.set("oracle_distance", dist);
            entries.push(std::move(e));
        }
        assert_check(oracle_match, "variational_oracle_match");
        Json variational = Json::object();
        variational.set("gamma0", gamma0);
        variational.set("kappa", kappa);
        variational.set("count", count);
        variational.set("oracle_count", static_cast<std::int64_t>(oracle.size()));
        variational.set("oracle_match", oracle_match);
        variational.set("eigenvalues", std::move(entries));
        report.set("variational", std::move(variational));
    }

    // Index bounds.
    {
        BoundReport bounds = bounds_report(sys, params, var, best.a, best.b, a_hat, 0.0);
        bool est1_ok = true, est2_ok = true;
        Json entries = Json::array();
        for (std::size_t i = 0; i < var.eigenvalues.size(); ++i) {
            double lambda = var.eigenvalues[i];
            bool lo_ok = bounds.est1_lower[i] <= lambda + tol.cmp;
            bool hi_ok = lambda <= bounds.est1_upper[i] + tol.cmp;
            est1_ok = est1_ok && lo_ok && hi_ok;
            Json e = Json::object();
            e.set("n", static_cast<std::int64_t>(i + 1));
            e.set("nu", bounds.nu[kappa + static_cast<Eigen::Index>(i)]);
            e.set("est1_lower", bounds.est1_lower[i]);
            e.set("est1_upper", bounds.est1_upper[i]);
            if (bounds.est2_upper[i]) {
                est2_ok = est2_ok && lambda <= *bounds.est2_upper[i] + tol.cmp;
                e.set("est2_upper", *bounds.est2_upper[i]);
            } else {
                e.set("est2_upper", Json(nullptr));
            }
            e.set("asym_residual", bounds.asym_residual[i]);
            entries.push(std::move(e));
        }
        assert_check(est1_ok, "est1");
        assert_check(est2_ok, "est2");
        assert_check(bounds.discr_ok, "discr_est");
        Json b = Json::object();
        b.set("discr_ok", bounds.discr_ok);
        b.set("entries", std::move(entries));
        report.set("bounds", std::move(b));
    }

    // Krein certificates.
    if (options.krein) {
        Json krein = Json::object();
        auto verdicts = positive_type_check(sys, params);
        bool all_positive = true;
        Json list = Json::array();
        for (const auto& v : verdicts) {
            all_positive = all_positive && v.positive;
            Json e = Json::object();
            e.set("eigenvalue", v.eigenvalue);
            e.set("multiplicity", v.multiplicity);
            e.set("min_gram_eigenvalue", v.min_gram_eigenvalue);
            e.set("positive", v.positive);
            list.push(std::move(e));
        }
        assert_check(all_positive, "krein_positive_type");
        krein.set("positive_type", std::move(list));
        krein.set("nonreal_count", nonreal_count(sys));
        if (params.strictA && params.mu_plus) {
            bool nonneg_all = true;
            double min_eig = std::numeric_limits<double>::infinity();
            Json gammas = Json::array();
            for (int k = 1; k <= 5; ++k) {
                double gamma = params.mu + k / 6.0 * (*params.mu_plus - params.mu);
                auto [ok, me] = krein_nonneg_check(sys, params, gamma);
                nonneg_all = nonneg_all && ok;
                min_eig = std::min(min_eig, me);
                Json e = Json::object();
                e.set("gamma", gamma);
                e.set("psd", ok);
                e.set("min_eig", me);
                gammas.push(std::move(e));
            }
            assert_check(nonneg_all, "krein_nonnegative");
            krein.set("nonneg_gap", std::move(gammas));
            krein.set("min_eig_jm", min_eig);
        } else {
            krein.set("nonneg_gap", Json(nullptr));
            krein.set("min_eig_jm", Json(nullptr));
        }
        report.set("krein", std::move(krein));
    } else {
        report.set("krein", Json(nullptr));
    }

    // Quadratic numerical range sampling.
    if (options.qnr) {
        if (!manifest.seed)
            throw Error(ErrorCode::ParseError, "sampling requires an explicit seed");
        auto points = sample_qnr(sys, manifest.samples, *manifest.seed);
        bool inside = true;
        bool lower_ok = true;
        double q_max_imag = 0.0;
        for (const auto& p : points) {
            inside = inside && in_enclosure(p.value(), params);
            lower_ok = lower_ok &&
                       p.lambda_minus.real() <=
                           params.mu + tol.box * (1.0 + std::abs(p.lambda_minus));
            q_max_imag = std::max(q_max_imag, std::abs(p.value().imag()));
        }
        assert_check(inside, "qnr_membership");
        assert_check(lower_ok, "qnr_lower_branch");
        Json qnr = Json::object();
        qnr.set("count", static_cast<std::int64_t>(points.size()));
        qnr.set("all_inside", inside);
        qnr.set("lower_branch_below_mu", lower_ok);
        qnr.set("max_imag", q_max_imag);
        report.set("qnr", std::move(qnr));
    } else {
        report.set("qnr", Json(nullptr));
    }

    {
        Json assertions = Json::object();
        assertions.set("all_passed", outcome.all_passed);
        Json failures = Json::array();
        for (const auto& f : outcome.failures) failures.push(Json(f));
        assertions.set("failures", std::move(failures));
        report.set("assertions", std::move(assertions));
    }

    outcome.report_json = report.dump();
    return outcome;
}

std::string run_certify(const Manifest& manifest, const std::string& base_dir) {
    BlockSystem sys = system_from_manifest(manifest, base_dir);
    std::vector<double> grid = manifest.b_grid.empty() ? default_b_grid(sys) : manifest.b_grid;
    OptimizedBound best = optimize_bound(sys, grid);
    const EnclosureParams& params = best.params;
    double a_hat = max_ahat_for_bhat(sys, 0.0);

    Json cert = Json::object();
    cert.set("schema", kCertificateSchema);
    cert.set("version", kToolVersion);
    {
        Json bound = Json::object();
        bound.set("a", best.a);
        bound.set("b", best.b);
        bound.set("a_hat", a_hat);
        bound.set("b_hat", 0.0);
        bound.set("psd_residual", pair_psd_residual(sys, best.a, best.b));
        cert.set("bound", std::move(bound));
    }
    cert.set("params", enclosure_json(params));

    GenEig spec = spectrum_M(sys);
    {
        Json eigs = Json::array();
        for (Complex z : spec.values) {
            Json e = Json::object();
            e.set("re", z.real());
            e.set("im", z.imag());
            e.set("margin", enclosure_margin(z, params));
            eigs.push(std::move(e));
        }
        cert.set("eigenvalue_margins", std::move(eigs));
    }

    double gamma0 = manifest.gamma0 ? *manifest.gamma0 : default_gamma0(params);
    std::vector<double> oracle =
        sorted_real_above(spec.values, gamma0, 1e-8 * std::max(1.0, norm_M(sys)));
    int kappa = kappa_minus(sys, gamma0);
    int available = static_cast<int>(sys.n1()) - kappa;
    int count = manifest.num_eigs ? std::min(*manifest.num_eigs, available)
                                  : std::min<int>(static_cast<int>(oracle.size()), available);
    VarEigResult var = variational_spectrum(sys, params, gamma0, count);
    BoundReport bounds = bounds_report(sys, params, var, best.a, best.b, a_hat, 0.0);
    {
        Json list = Json::array();
        const double b_hat = 0.0;
        for (std::size_t i = 0; i < var.eigenvalues.size(); ++i) {
            double lambda = var.eigenvalues[i];
            double nu = bounds.nu[kappa + static_cast<Eigen::Index>(i)];
            double disc = std::pow((nu - params.delta_minus) / 2.0, 2) - b_hat * nu - a_hat;
            Json e = Json::object();
            e.set("n", static_cast<std::int64_t>(i + 1));
            e.set("lambda", lambda);
            e.set("est1_lower_margin", lambda - bounds.est1_lower[i]);
            e.set("est1_upper_margin", bounds.est1_upper[i] - lambda);
            if (bounds.est2_upper[i])
                e.set("est2_margin", *bounds.est2_upper[i] - lambda);
            else
                e.set("est2_margin", Json(nullptr));
            e.set("discr_margin", disc);
            list.push(std::move(e));
        }
        cert.set("bound_margins", std::move(list));
    }
    return cert.dump();
}

QnrCsv run_qnr_csv(const Manifest& manifest, const std::string& base_dir, int count,
                   std::uint64_t seed) {
    BlockSystem sys = system_from_manifest(manifest, base_dir);
    std::vector<double> grid = manifest.b_grid.empty() ? default_b_grid(sys) : manifest.b_grid;
    OptimizedBound best = optimize_bound(sys, grid);
    const EnclosureParams& params = best.params;

    auto points = sample_qnr(sys, count, seed);
    std::ostringstream pts;
    pts << "re,im,branch,alpha,beta,delta\n";
    double re_span = std::abs(params.mu) + 1.0;
    for (const auto& p : points) {
        Complex v = p.value();
        re_span = std::max(re_span, std::abs(v.real()));
        pts << fmt17(v.real()) << ',' << fmt17(v.imag()) << ',' << (p.branch >= 0 ? '+' : '-')
            << ',' << fmt17(p.alpha) << ',' << fmt17(p.beta) << ',' << fmt17(p.delta) << '\n';
    }

    std::ostringstream bd;
    bd << "kind,x1,y1,x2,y2\n";
    auto segment = [&](const char* kind, double x1, double y1, double x2, double y2) {
        bd << kind << ',' << fmt17(x1) << ',' << fmt17(y1) << ',' << fmt17(x2) << ','
           << fmt17(y2) << '\n';
    };
    double right = 1.1 * re_span + 1.0;
    if (params.condA) {
        double lo = params.mu_minus ? *params.mu_minus : -right;
        segment("interval", lo, 0.0, params.mu, 0.0);
        if (params.mu_plus) segment("interval", *params.mu_plus, 0.0, right, 0.0);
    } else {
        double lo = params.mu_minus ? *params.mu_minus : -right;
        segment("interval", lo, 0.0, right, 0.0);
        segment("box_edge", params.xi_minus, -params.eta, params.mu, -params.eta);
        segment("box_edge", params.mu, -params.eta, params.mu, params.eta);
        segment("box_edge", params.mu, params.eta, params.xi_minus, params.eta);
        segment("box_edge", params.xi_minus, params.eta, params.xi_minus, -params.eta);
    }
    return QnrCsv{pts.str(), bd.str()};
}

std::string emit_example(const Manifest::ExampleSpec& spec, const std::string& out_dir) {
    Manifest probe;
    probe.example = spec;
    BlockSystem sys = system_from_manifest(probe, "");

    std::filesystem::create_directories(out_dir);
    std::filesystem::path dir(out_dir);
    mmio::write_matrix((dir / "A.mtx").string(), sys.A, /*symmetric=*/true);
    mmio::write_matrix((dir / "B.mtx").string(), sys.B, /*symmetric=*/false);
    mmio::write_matrix((dir / "D.mtx").string(), sys.D, /*symmetric=*/true);

    Json manifest = Json::object();
    Json matrices = Json::object();
    matrices.set("a", "A.mtx");
    matrices.set("b", "B.mtx");
    matrices.set("d", "D.mtx");
    manifest.set("matrices", std::move(matrices));
    Json options = Json::object();
    options.set("seed", Json(std::int64_t{0}));
    manifest.set("options", std::move(options));

    std::string path = (dir / "manifest.json").string();
    write_text_file(path, manifest.dump());
    return path;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write " + tmp.string());
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace jspectra
