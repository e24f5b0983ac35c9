#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "volconv/basis.hpp"
#include "volconv/errors.hpp"
#include "volconv/polyseries.hpp"
#include "volconv/volterra.hpp"

namespace volconv {

namespace detail {

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return s;
}

inline std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

/// Canonical spelling used in files: Chebyshev, Legendre, Gegenbauer, Jacobi, WeightedLaguerre.
inline std::string kind_name(BasisKind k) {
    switch (k) {
    case BasisKind::Chebyshev: return "Chebyshev";
    case BasisKind::Legendre: return "Legendre";
    case BasisKind::Gegenbauer: return "Gegenbauer";
    case BasisKind::Jacobi: return "Jacobi";
    case BasisKind::WeightedLaguerre: return "WeightedLaguerre";
    }
    return "";
}

/// Case-insensitive; "laguerre" is accepted for WeightedLaguerre.
inline BasisKind parse_kind(const std::string& s) {
    const auto l = detail::lower(s);
    if (l == "chebyshev") return BasisKind::Chebyshev;
    if (l == "legendre") return BasisKind::Legendre;
    if (l == "gegenbauer" || l == "ultraspherical") return BasisKind::Gegenbauer;
    if (l == "jacobi") return BasisKind::Jacobi;
    if (l == "weightedlaguerre" || l == "laguerre") return BasisKind::WeightedLaguerre;
    throw UnsupportedBasis("unknown basis kind '" + s + "'");
}

inline nlohmann::json to_json(const BasisSpec& b) {
    nlohmann::json j{{"kind", kind_name(b.kind)}};
    if (b.kind == BasisKind::Gegenbauer) j["lambda"] = b.lambda;
    if (b.kind == BasisKind::Jacobi) {
        j["alpha"] = b.alpha;
        j["beta"] = b.beta;
    }
    if (b.kind == BasisKind::WeightedLaguerre && b.scale != 1.0) j["scale"] = b.scale;
    return j;
}

inline BasisSpec basis_from_json(const nlohmann::json& j) {
    try {
        BasisSpec b;
        b.kind = parse_kind(j.at("kind").get<std::string>());
        b.lambda = j.value("lambda", 0.0);
        b.alpha = j.value("alpha", 0.0);
        b.beta = j.value("beta", 0.0);
        b.scale = j.value("scale", 1.0);
        b.validate();
        return b;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed basis object: ") + e.what());
    }
}

/// {"basis": {...}, "domain": [a, b], "coeffs": [...]}; Laguerre domains are [0, null].
inline nlohmann::json to_json(const PolySeries& s) {
    nlohmann::json dom = nlohmann::json::array({s.domain().a});
    if (s.basis().finite_interval())
        dom.push_back(s.domain().b);
    else
        dom.push_back(nullptr);
    return {{"basis", to_json(s.basis())}, {"domain", dom}, {"coeffs", std::vector<double>(s.coeffs().begin(), s.coeffs().end())}};
}

inline PolySeries series_from_json(const nlohmann::json& j) {
    try {
        const auto basis = basis_from_json(j.at("basis"));
        auto coeffs = j.at("coeffs").get<std::vector<double>>();
        Interval dom = basis.finite_interval() ? canonical_interval : half_line;
        if (j.contains("domain")) {
            const auto& d = j.at("domain");
            if (!d.is_array() || d.size() != 2) throw IoError("domain must be a two-element array");
            dom.a = d[0].get<double>();
            dom.b = d[1].is_null() ? std::numeric_limits<double>::infinity() : d[1].get<double>();
            if (!basis.finite_interval() && (dom.a != 0.0 || std::isfinite(dom.b)))
                throw IoError("weighted Laguerre series must live on [0, null]");
        }
        return {basis, dom, std::move(coeffs)};
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed series object: ") + e.what());
    }
}

inline nlohmann::json to_json(const VolterraProblem& p) { return {{"kernel", to_json(p.kernel)}, {"rhs", to_json(p.rhs)}}; }

inline VolterraProblem problem_from_json(const nlohmann::json& j) {
    try {
        VolterraProblem p{series_from_json(j.at("kernel")), series_from_json(j.at("rhs"))};
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed problem object: ") + e.what());
    }
}

/// '#'-prefixed key=value lines (basis, lambda, alpha, beta, scale, domain)
/// followed by one coefficient per line.
inline void write_series_csv(std::ostream& os, const PolySeries& s) {
    const auto& b = s.basis();
    os << "# basis=" << kind_name(b.kind) << '\n';
    if (b.kind == BasisKind::Gegenbauer) os << "# lambda=" << detail::fmt17(b.lambda) << '\n';
    if (b.kind == BasisKind::Jacobi)
        os << "# alpha=" << detail::fmt17(b.alpha) << "\n# beta=" << detail::fmt17(b.beta) << '\n';
    if (b.kind == BasisKind::WeightedLaguerre) {
        os << "# scale=" << detail::fmt17(b.scale) << "\n# domain=0,null\n";
    } else {
        os << "# domain=" << detail::fmt17(s.domain().a) << ',' << detail::fmt17(s.domain().b) << '\n';
    }
    for (double c : s.coeffs()) os << detail::fmt17(c) << '\n';
}

inline PolySeries read_series_csv(std::istream& is) {
    BasisSpec b;
    bool have_domain = false;
    Interval dom;
    std::vector<double> coeffs;
    std::string line;
    auto number = [](const std::string& t) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            throw IoError("series CSV: not a number: '" + t + "'");
        }
        if (t.find_first_not_of(" \t\r", used) != std::string::npos)
            throw IoError("series CSV: trailing characters in '" + t + "'");
        return v;
    };
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line[0] == '#') {
            const auto body = line.substr(line.find_first_not_of("# \t"));
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            const auto key = detail::lower(body.substr(0, eq));
            const auto val = body.substr(eq + 1);
            if (key == "basis") b.kind = parse_kind(val);
            else if (key == "lambda") b.lambda = number(val);
            else if (key == "alpha") b.alpha = number(val);
            else if (key == "beta") b.beta = number(val);
            else if (key == "scale") b.scale = number(val);
            else if (key == "domain") {
                const auto comma = val.find(',');
                if (comma == std::string::npos) throw IoError("series CSV: domain needs two comma-separated values");
                dom.a = number(val.substr(0, comma));
                const auto hi = val.substr(comma + 1);
                dom.b = detail::lower(hi) == "null" ? std::numeric_limits<double>::infinity() : number(hi);
                have_domain = true;
            }
            continue;
        }
        coeffs.push_back(number(line));
    }
    if (coeffs.empty()) throw IoError("series CSV: no coefficients");
    b.validate();
    if (!have_domain) dom = b.finite_interval() ? canonical_interval : half_line;
    return {b, dom, std::move(coeffs)};
}

/// Row-major dense matrix, comma separated, %.17g.
inline void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& A) {
    for (Eigen::Index k = 0; k < A.rows(); ++k) {
        for (Eigen::Index n = 0; n < A.cols(); ++n) {
            if (n) os << ',';
            os << detail::fmt17(A(k, n));
        }
        os << '\n';
    }
}

inline Eigen::MatrixXd read_matrix_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> r;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                r.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IoError("matrix CSV: not a number: '" + cell + "'");
            }
        }
        if (!rows.empty() && r.size() != rows.front().size()) throw IoError("matrix CSV: ragged rows");
        rows.push_back(std::move(r));
    }
    Eigen::MatrixXd A(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t n = 0; n < rows[k].size(); ++n) A(k, n) = rows[k][n];
    return A;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("error writing '" + path + "'");
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(what + ": invalid JSON: " + e.what());
    }
}

/// JSON when the text starts with '{', series CSV otherwise.
inline PolySeries load_series(const std::string& path) {
    const auto text = read_text_file(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return series_from_json(parse_json(text, path));
    std::istringstream is(text);
    return read_series_csv(is);
}

inline void save_series(const std::string& path, const PolySeries& s, bool csv = false) {
    if (csv) {
        std::ostringstream os;
        write_series_csv(os, s);
        write_text_file(path, os.str());
    } else {
        write_text_file(path, to_json(s).dump(2) + "\n");
    }
}

}  // namespace volconv
