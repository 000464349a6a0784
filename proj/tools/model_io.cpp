#include "model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperpoly/errors.hpp"

namespace hyperpoly::cli {

using nlohmann::json;

namespace {

bool is_entry(const json& e) { return e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(); }

Complex entry(const json& e) {
    if (!is_entry(e)) throw ParseError("matrix entries must be [re, im] pairs");
    return {e[0].get<double>(), e[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& c, Eigen::Index n) {
    if (n == 1 && is_entry(c)) return ComplexMatrix::Constant(1, 1, entry(c));
    if (!c.is_array() || c.empty()) throw ParseError("coefficient must be a nonempty list of rows");
    if (n == 1 && c.size() == 1 && is_entry(c[0])) return ComplexMatrix::Constant(1, 1, entry(c[0]));
    const std::size_t cols = c[0].is_array() ? c[0].size() : 0;
    for (const auto& row : c)
        if (!row.is_array() || row.size() != cols) throw ParseError("ragged coefficient matrix");
    ComplexMatrix m(static_cast<Eigen::Index>(c.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = entry(c[i][j]);
    return m;
}

SymmetricMatrix parse_real_symmetric(const json& rows) {
    if (!rows.is_array() || rows.empty()) throw ParseError("matrix must be a nonempty list of rows");
    const std::size_t m = rows.size();
    RealMatrix a(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != m) throw ParseError("ragged or non-square matrix");
        for (std::size_t j = 0; j < m; ++j) {
            if (!rows[i][j].is_number()) throw ParseError("matrix entries must be numbers");
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j].get<double>();
        }
    }
    try {
        return SymmetricMatrix(a, 1e-10);
    } catch (const Error& e) {
        throw ValidationError(e.what());
    }
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MatrixPolynomial parse_model(const json& doc) {
    if (!doc.is_object()) throw ParseError("model must be an object");
    for (const char* key : {"n", "ell", "coefficients"})
        if (!doc.contains(key)) throw ParseError(std::string("missing field ") + key);
    if (!doc["n"].is_number_integer() || !doc["ell"].is_number_integer()) throw ParseError("n and ell must be integers");
    if (!doc["coefficients"].is_array()) throw ParseError("coefficients must be a list");
    const long long n = doc["n"].get<long long>();
    const long long ell = doc["ell"].get<long long>();
    if (n < 1 || ell < 0) throw ValidationError("need n >= 1 and ell >= 0");
    const json& cs = doc["coefficients"];
    MatrixCoefficients coeffs;
    for (const auto& c : cs) coeffs.push_back(parse_matrix(c, n));
    if (static_cast<long long>(coeffs.size()) != ell + 1)
        throw ValidationError("expected ell + 1 = " + std::to_string(ell + 1) + " coefficients");
    for (const auto& c : coeffs)
        if (c.rows() != n || c.cols() != n) throw ValidationError("coefficient is not n x n");
    const ComplexMatrix& lead = coeffs.back();
    if ((lead - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-12)
        throw ValidationError("leading coefficient is not the identity");
    return MatrixPolynomial(std::move(coeffs));
}

MatrixPolynomial load_model(const std::string& path) { return parse_model(parse_text(read_file(path))); }

ScalarPolynomial load_scalar(const std::string& path) {
    const MatrixPolynomial p = load_model(path);
    if (p.size() != 1) throw ValidationError(path + ": expected a scalar model (n = 1)");
    return p.diagonal_entry(0);
}

json model_to_json(const MatrixPolynomial& p) {
    json cs = json::array();
    for (const auto& c : p.coeffs()) {
        json rows = json::array();
        for (Eigen::Index i = 0; i < c.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < c.cols(); ++j) row.push_back({c(i, j).real(), c(i, j).imag()});
            rows.push_back(row);
        }
        cs.push_back(rows);
    }
    return {{"n", p.size()}, {"ell", p.degree()}, {"coefficients", cs}};
}

std::pair<SymmetricMatrix, SymmetricMatrix> parse_pair(const json& doc) {
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b")) throw ParseError("pair needs fields a and b");
    return {parse_real_symmetric(doc["a"]), parse_real_symmetric(doc["b"])};
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace hyperpoly::cli
