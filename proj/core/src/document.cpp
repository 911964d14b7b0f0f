#include "neutrix/document.hpp"

#include <fstream>
#include <sstream>

namespace neutrix {

ModelKind parse_model_kind(const std::string& name) {
    if (name == "fcm") return ModelKind::Fcm;
    if (name == "ncm") return ModelKind::Ncm;
    if (name == "frm") return ModelKind::Frm;
    if (name == "nrm") return ModelKind::Nrm;
    if (name == "fam") return ModelKind::Fam;
    if (name == "bam") return ModelKind::Bam;
    if (name == "nbam") return ModelKind::Nbam;
    if (name == "fre") return ModelKind::Fre;
    throw std::invalid_argument("unknown model kind '" + name + "'");
}

std::string model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::Fcm: return "fcm";
        case ModelKind::Ncm: return "ncm";
        case ModelKind::Frm: return "frm";
        case ModelKind::Nrm: return "nrm";
        case ModelKind::Fam: return "fam";
        case ModelKind::Bam: return "bam";
        case ModelKind::Nbam: return "nbam";
        case ModelKind::Fre: return "fre";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(trim(tok));
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

// scale=[lo,hi] or scale=<[-a,a]u[-aI,aI]>
void parse_scale(const std::string& value, MatrixDocument& doc, std::size_t line_no) {
    std::string v = value;
    if (!v.empty() && v.front() == '<' && v.back() == '>') {
        doc.neutrosophic_scale = true;
        std::size_t u = v.find('u');
        if (u == std::string::npos) u = v.find('U');
        if (u == std::string::npos) throw DocSyntaxError(line_no, "malformed neutrosophic scale");
        v = trim(v.substr(1, u - 1));
    }
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw DocSyntaxError(line_no, "malformed scale '" + value + "'");
    auto parts = split(v.substr(1, v.size() - 2), ',');
    if (parts.size() != 2) throw DocSyntaxError(line_no, "scale needs two endpoints");
    try {
        doc.scale_lo = Rational::from_decimal(parts[0]);
        doc.scale_hi = Rational::from_decimal(parts[1]);
    } catch (const std::exception& e) {
        throw DocSyntaxError(line_no, e.what());
    }
    if (doc.scale_lo >= doc.scale_hi) throw DocSyntaxError(line_no, "scale endpoints out of order");
}

ValueDomain domain_for(const MatrixDocument& doc) {
    if (doc.neutrosophic_scale)
        return ValueDomain::neutrosophic(Rational::max(doc.scale_lo.abs(), doc.scale_hi.abs()));
    if (doc.scale_lo >= Rational(0) && doc.scale_hi <= Rational(1)) return ValueDomain::fuzzy_unit();
    if (doc.scale_lo >= Rational(-1) && doc.scale_hi <= Rational(1)) return ValueDomain::signed_fuzzy();
    return ValueDomain::bounded(Rational::max(doc.scale_lo.abs(), doc.scale_hi.abs()));
}

} // namespace

void MatrixDocument::check() const {
    matrix.validate();
    if (kind == ModelKind::Fcm || kind == ModelKind::Ncm) {
        if (matrix.rows() != matrix.cols())
            throw ShapeError("cognitive maps must be square");
        if (!matrix.has_zero_diagonal()) throw ShapeError("cognitive maps must have a zero diagonal");
    }
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            const NeutroScalar& e = matrix.at(r, c);
            bool ok;
            if (neutrosophic_scale) {
                Rational bound = Rational::max(scale_lo.abs(), scale_hi.abs());
                ok = e.real.abs() <= bound && e.indet.abs() <= bound;
            } else {
                ok = e.is_pure_real() && e.real >= scale_lo && e.real <= scale_hi;
            }
            if (!ok)
                throw DomainViolation("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                      ") = " + print_scalar(e) + " outside the declared scale");
        }
    }
}

MatrixDocument parse_matrix_document(const std::string& text) {
    MatrixDocument doc;
    std::optional<std::size_t> rows, cols;
    bool have_kind = false, have_scale = false;
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> row_labels, col_labels;

    std::stringstream ss(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        bool header_like = eq != std::string::npos && line.find_first_of(" \t") > eq;
        if (header_like && grid.empty()) {
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (key == "kind") {
                try {
                    doc.kind = parse_model_kind(value);
                } catch (const std::exception& e) {
                    throw DocSyntaxError(line_no, e.what());
                }
                have_kind = true;
            } else if (key == "scale") {
                parse_scale(value, doc, line_no);
                have_scale = true;
            } else if (key == "rows") {
                rows = static_cast<std::size_t>(std::stoul(value));
            } else if (key == "cols") {
                cols = static_cast<std::size_t>(std::stoul(value));
            } else if (key == "row_labels") {
                row_labels = split(value, ',');
            } else if (key == "col_labels") {
                col_labels = split(value, ',');
            } else {
                throw DocSyntaxError(line_no, "unknown header key '" + key + "'");
            }
        } else {
            grid.push_back(split_ws(line));
        }
    }
    if (!have_kind) throw DocSyntaxError(line_no, "missing kind= header");
    if (!have_scale) throw DocSyntaxError(line_no, "missing scale= header");
    if (!rows || !cols) throw DocSyntaxError(line_no, "missing rows=/cols= header");
    if (grid.size() != *rows)
        throw ShapeError("expected " + std::to_string(*rows) + " grid rows, found " +
                         std::to_string(grid.size()));
    for (std::size_t r = 0; r < grid.size(); ++r)
        if (grid[r].size() != *cols)
            throw ShapeError("grid row " + std::to_string(r + 1) + " has " +
                             std::to_string(grid[r].size()) + " entries, expected " +
                             std::to_string(*cols));

    doc.matrix = ModelMatrix::from_tokens(grid, domain_for(doc));
    doc.matrix.row_labels = std::move(row_labels);
    doc.matrix.col_labels = std::move(col_labels);
    doc.check();
    return doc;
}

MatrixDocument load_matrix_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_document(buf.str());
}

std::string print_matrix_document(const MatrixDocument& doc) {
    std::string out;
    out += "kind=" + model_kind_name(doc.kind) + "\n";
    std::string scale = "[" + doc.scale_lo.to_string() + "," + doc.scale_hi.to_string() + "]";
    if (doc.neutrosophic_scale) {
        Rational b = Rational::max(doc.scale_lo.abs(), doc.scale_hi.abs());
        scale = "<" + scale + "u[-" + b.to_string() + "I," + b.to_string() + "I]>";
    }
    out += "scale=" + scale + "\n";
    out += "rows=" + std::to_string(doc.matrix.rows()) + "\n";
    out += "cols=" + std::to_string(doc.matrix.cols()) + "\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += v[i];
        }
        return s;
    };
    if (!doc.matrix.row_labels.empty()) out += "row_labels=" + join(doc.matrix.row_labels) + "\n";
    if (!doc.matrix.col_labels.empty()) out += "col_labels=" + join(doc.matrix.col_labels) + "\n";
    for (std::size_t r = 0; r < doc.matrix.rows(); ++r) {
        for (std::size_t c = 0; c < doc.matrix.cols(); ++c) {
            if (c) out += " ";
            out += print_scalar(doc.matrix.at(r, c));
        }
        out += "\n";
    }
    return out;
}

} // namespace neutrix
