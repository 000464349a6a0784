#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly::cli {

/// Malformed document: bad JSON, ragged matrices, entries that are not [re, im].
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed but inconsistent: n or ell disagree with the data, leading coefficient not the identity.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);

/**
 * Model document {n, ell, coefficients[, name]}: ell + 1 matrices in
 * ascending degree, each a list of rows of [re, im] entries. For n = 1 a
 * coefficient may also be written as one entry [re, im] or as [[re, im]].
 * The leading coefficient must equal the identity within 1e-12 entrywise.
 */
MatrixPolynomial parse_model(const nlohmann::json& doc);
MatrixPolynomial load_model(const std::string& path);

/// n = 1 model as a scalar polynomial; ValidationError for n > 1.
ScalarPolynomial load_scalar(const std::string& path);

nlohmann::json model_to_json(const MatrixPolynomial& p);

/// {"a": rows, "b": rows} of real symmetric matrices.
std::pair<SymmetricMatrix, SymmetricMatrix> parse_pair(const nlohmann::json& doc);

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL);

}  // namespace hyperpoly::cli
