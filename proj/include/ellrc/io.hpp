#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellrc/lrc.hpp"

namespace ellrc {

/// Contents of a `.ellrc` generator-matrix file.
struct EllrcFile {
    EllrcFile(Field f, Curve c) : field(std::move(f)), curve(std::move(c)) {}

    Field field;
    Curve curve;
    std::size_t n = 0;
    std::size_t k = 0;
    CodeMode mode = CodeMode::Single;
    std::size_t fiber_size = 0;
    std::size_t m = 0;
    std::vector<int> localities;  // r, or r1 r2
    std::int64_t d0 = 0;          // two mode only
    std::vector<Pt> points;
    Matrix matrix;

    bool operator==(const EllrcFile& other) const;
};

/// Everything needed to rebuild an LrcCode over the file's curve.
struct Recipe {
    CodeMode mode = CodeMode::Single;
    std::vector<Pt> H;  // pole order, normally O last
    std::vector<AutoMap> A;
    std::vector<AutoMap> A1;
    std::vector<AutoMap> A2;
    std::size_t m = 0;
    int t = 0;
    std::int64_t d0 = 0;
    bool exclude_torsion = false;
    std::uint64_t seed = 0;
};

const char* to_string(CodeMode mode);
CodeMode parse_code_mode(std::string_view text);

/// Requires a generator matrix.
EllrcFile to_file(const LrcCode& code);
Recipe to_recipe(const LrcCode& code);
LrcCode rebuild(const FunctionField& K, const Recipe& recipe, bool build_generator = true);

std::string write_ellrc(const EllrcFile& file);
EllrcFile parse_ellrc(const std::string& text);

/// JSON mirror: the file contents plus, optionally, the recipe and a free-form summary object (JSON text).
std::string write_json(const EllrcFile& file, const std::optional<Recipe>& recipe, const std::string& summary_json = {});
struct JsonMirror {
    EllrcFile file;
    std::optional<Recipe> recipe;
};
JsonMirror parse_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace ellrc
