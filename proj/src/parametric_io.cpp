#include "axbsolve/parametric_io.hpp"

#include <regex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"

namespace axbsolve {

namespace {

using nlohmann::json;

struct TermStyle {
    // Renders |coefficient| * name for a coefficient whose magnitude is not 1.
    std::string (*scaled)(const Rational& magnitude, const std::string& name);
    std::string (*constant)(const Rational& magnitude);
    std::string (*name)(const std::string& name);
};

std::string text_scaled(const Rational& c, const std::string& name) { return c.to_string() + "*" + name; }
std::string text_constant(const Rational& c) { return c.to_string(); }
std::string text_name(const std::string& name) { return name; }

std::string latex_constant(const Rational& c) {
    if (c.is_integer()) return c.to_string();
    return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
}

std::string latex_name(const std::string& name) {
    static const std::regex greek(
        "(alpha|beta|gamma|delta|epsilon|zeta|eta|theta|iota|kappa|lambda|mu|nu|xi|pi|rho|sigma|tau|upsilon|phi|chi|"
        "psi|omega)(?:_([0-9]+))?");
    static const std::regex indexed("([A-Za-z]+)_?([0-9]+)");
    std::smatch m;
    if (std::regex_match(name, m, greek)) {
        std::string out = "\\" + m[1].str();
        if (m[2].matched) out += "_{" + m[2].str() + "}";
        return out;
    }
    if (std::regex_match(name, m, indexed)) return m[1].str() + "_{" + m[2].str() + "}";
    return name;
}

std::string latex_scaled(const Rational& c, const std::string& name) { return latex_constant(c) + latex_name(name); }

constexpr TermStyle kText{text_scaled, text_constant, text_name};
constexpr TermStyle kLatex{latex_scaled, latex_constant, latex_name};

std::string render_affine(const ParametricMatrix& x, std::size_t i, std::size_t j, const TermStyle& style) {
    std::string out;
    auto append = [&](const Rational& c, const std::string& body) {
        if (c.sign() < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        out += body;
    };
    const Rational& k = x.constant()(i, j);
    if (!k.is_zero()) append(k, style.constant(abs(k)));
    for (const auto& p : x.params()) {
        const Rational& c = p.coeff(i, j);
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        append(c, mag.is_one() ? style.name(p.name) : style.scaled(mag, p.name));
    }
    return out.empty() ? "0" : out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Rational entry_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    throw std::invalid_argument("matrix entry must be a string or an integer");
}

Matrix matrix_from_json(const json& v, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!v.is_array() || v.size() != rows) throw std::invalid_argument(what + ": expected " + std::to_string(rows) + " rows");
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (const auto& row : v) {
        if (!row.is_array() || row.size() != cols) {
            throw std::invalid_argument(what + ": expected rows of " + std::to_string(cols) + " entries");
        }
        for (const auto& e : row) entries.push_back(entry_from_json(e));
    }
    return Matrix(rows, cols, std::move(entries));
}

}  // namespace

std::string format_affine(const ParametricMatrix& x, std::size_t i, std::size_t j) {
    return render_affine(x, i, j, kText);
}

std::string format_parametric_text(const ParametricMatrix& x) {
    std::string out = "# " + std::to_string(x.param_count()) + " parameters";
    if (x.param_count() > 0) {
        out += ':';
        for (const auto& p : x.params()) out += ' ' + p.name;
    }
    out += '\n';
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j > 0) out += ' ';
            out += format_affine(x, i, j);
        }
        out += '\n';
    }
    return out;
}

std::string format_parametric_latex(const ParametricMatrix& x) {
    std::string out = "\\begin{bmatrix}\n";
    for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (j > 0) out += " & ";
            out += render_affine(x, i, j, kLatex);
        }
        out += i + 1 < x.rows() ? " \\\\\n" : "\n";
    }
    out += "\\end{bmatrix}\n";
    return out;
}

std::string format_parametric_json(const ParametricMatrix& x, int indent) {
    json j;
    j["rows"] = x.rows();
    j["cols"] = x.cols();
    j["constant"] = matrix_to_json(x.constant());
    j["params"] = json::array();
    for (const auto& p : x.params()) j["params"].push_back({{"name", p.name}, {"coeff", matrix_to_json(p.coeff)}});
    return j.dump(indent);
}

ParametricMatrix parse_parametric_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("constant")) {
        throw std::invalid_argument("parametric matrix JSON needs rows, cols and constant");
    }
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) {
        throw std::invalid_argument("rows and cols must be non-negative integers");
    }
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    Matrix constant = matrix_from_json(j["constant"], rows, cols, "constant");
    std::vector<Parameter> params;
    if (j.contains("params")) {
        if (!j["params"].is_array()) throw std::invalid_argument("params must be an array");
        for (const auto& p : j["params"]) {
            if (!p.is_object() || !p.contains("name") || !p["name"].is_string() || !p.contains("coeff")) {
                throw std::invalid_argument("each parameter needs a string name and a coeff matrix");
            }
            const auto name = p["name"].get<std::string>();
            params.push_back({name, matrix_from_json(p["coeff"], rows, cols, "coeff of " + name)});
        }
    }
    return ParametricMatrix(std::move(constant), std::move(params));
}

}  // namespace axbsolve
