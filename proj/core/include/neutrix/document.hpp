#pragma once

#include "neutrix/matrix.hpp"

#include <iosfwd>
#include <string>

namespace neutrix {

/// Model kinds a matrix file can declare. Cognitive kinds must be square
/// with a zero diagonal; the others only need their scale respected.
enum class ModelKind { Fcm, Ncm, Frm, Nrm, Fam, Bam, Nbam, Fre };

ModelKind parse_model_kind(const std::string& name);
std::string model_kind_name(ModelKind kind);

struct DocSyntaxError : std::runtime_error {
    std::size_t line;
    DocSyntaxError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

/// Line-oriented matrix file: `#` comment lines (annotations), a header of
/// `key=value` pairs (kind, scale, rows, cols, optional labels), then
/// whitespace-separated scalar tokens, one grid row per line.
///
///   scale=[0,1]             real scale
///   scale=<[-5,5]u[-5I,5I]> neutrosophic scale, both parts bounded by 5
struct MatrixDocument {
    ModelKind kind = ModelKind::Fcm;
    Rational scale_lo = Rational(0);
    Rational scale_hi = Rational(1);
    bool neutrosophic_scale = false;
    ModelMatrix matrix;

    /// Kind- and scale-specific validation (zero diagonal, entry ranges).
    void check() const;
};

MatrixDocument parse_matrix_document(const std::string& text);
MatrixDocument load_matrix_document(const std::string& path);

/// Canonical form: header then token grid; comments are not preserved.
/// parse(print(doc)) reproduces the same matrix bit-exactly.
std::string print_matrix_document(const MatrixDocument& doc);

} // namespace neutrix
