#include "ellrc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ellrc {

namespace {

using nlohmann::json;

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

std::size_t to_size(const std::string& s) {
    try {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
        return static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
    }
}

std::int64_t to_int(const std::string& s) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "bad integer '" + s + "'");
    }
}

Curve parse_curve_line(const Field& F, const std::vector<std::string>& tok, std::size_t first) {
    if (tok.size() != first + 5) throw Error(ErrorKind::ParseError, "curve needs 5 coefficients");
    return Curve(F, F.parse(tok[first]), F.parse(tok[first + 1]), F.parse(tok[first + 2]), F.parse(tok[first + 3]),
                 F.parse(tok[first + 4]));
}

json map_json(const Field& F, const AutoMap& a) {
    return json::array({F.render(a.c1), F.render(a.c2), F.render(a.c3), F.render(a.c4), F.render(a.c5)});
}

AutoMap map_from_json(const Field& F, const json& j) {
    if (!j.is_array() || j.size() != 5) throw Error(ErrorKind::ParseError, "automorphism needs 5 coefficients");
    auto e = [&](std::size_t i) { return F.parse(j.at(i).get<std::string>()); };
    return AutoMap{e(0), e(1), e(2), e(3), e(4)};
}

json maps_json(const Field& F, const std::vector<AutoMap>& maps) {
    json out = json::array();
    for (const auto& a : maps) out.push_back(map_json(F, a));
    return out;
}

std::vector<AutoMap> maps_from_json(const Field& F, const json& j) {
    std::vector<AutoMap> out;
    for (const auto& a : j) out.push_back(map_from_json(F, a));
    return out;
}

json points_json(const Curve& C, const std::vector<Pt>& pts) {
    json out = json::array();
    for (const Pt& P : pts) out.push_back(C.render(P));
    return out;
}

std::vector<Pt> points_from_json(const Curve& C, const json& j) {
    std::vector<Pt> out;
    for (const auto& p : j) out.push_back(C.parse_point(p.get<std::string>()));
    return out;
}

}  // namespace

bool EllrcFile::operator==(const EllrcFile& other) const {
    return field == other.field && curve == other.curve && n == other.n && k == other.k && mode == other.mode &&
           fiber_size == other.fiber_size && m == other.m && localities == other.localities && d0 == other.d0 &&
           points == other.points && matrix == other.matrix;
}

const char* to_string(CodeMode mode) { return mode == CodeMode::Single ? "single" : "two"; }

CodeMode parse_code_mode(std::string_view text) {
    if (text == "single") return CodeMode::Single;
    if (text == "two") return CodeMode::Two;
    throw Error(ErrorKind::ParseError, "unknown code mode '" + std::string(text) + "'");
}

EllrcFile to_file(const LrcCode& code) {
    if (!code.has_generator()) throw Error(ErrorKind::InvalidArgument, "code has no generator matrix to export");
    EllrcFile f(code.K.field(), code.K.curve());
    f.n = code.n;
    f.k = code.k;
    f.mode = code.mode;
    f.fiber_size = code.fiber_size();
    f.m = code.m;
    f.localities = code.localities();
    f.d0 = code.mode == CodeMode::Two ? code.d0 : 0;
    f.points = code.places;
    f.matrix = code.generator;
    return f;
}

Recipe to_recipe(const LrcCode& code) {
    Recipe r;
    r.mode = code.mode;
    r.H = code.H;
    r.A = code.mode == CodeMode::Single ? code.A : std::vector<AutoMap>{};
    r.A1 = code.A1;
    r.A2 = code.A2;
    r.m = code.m;
    r.t = code.t;
    r.d0 = code.d0;
    r.exclude_torsion = code.exclude_torsion;
    return r;
}

LrcCode rebuild(const FunctionField& K, const Recipe& recipe, bool build_generator) {
    if (recipe.mode == CodeMode::Single) {
        SingleOptions o;
        o.exclude_torsion = recipe.exclude_torsion;
        o.pole_order = recipe.H;
        o.seed = recipe.seed;
        return build_code_single(K, recipe.H, recipe.A, recipe.m, recipe.t, o);
    }
    TwoOptions o;
    o.exclude_torsion = recipe.exclude_torsion;
    o.build_generator = build_generator;
    o.pole_order = recipe.H;
    o.seed = recipe.seed;
    return build_code_two(K, recipe.H, recipe.A1, recipe.A2, recipe.m, recipe.d0, o);
}

std::string write_ellrc(const EllrcFile& f) {
    std::ostringstream out;
    out << "ELLRC 1\n";
    out << "FIELD " << f.field.header() << "\n";
    out << "CURVE " << f.curve.render_coefficients() << "\n";
    out << "CODE " << f.n << " " << f.k << " " << to_string(f.mode) << " " << f.fiber_size << " " << f.m << "\n";
    out << "LOCALITY";
    for (int r : f.localities) out << " " << r;
    if (f.mode == CodeMode::Two) out << " " << f.d0;
    out << "\n";
    out << "POINTS\n";
    for (const Pt& P : f.points) out << f.curve.render(P) << "\n";
    out << "MATRIX\n";
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < f.matrix.cols(); ++j) out << (j ? " " : "") << f.field.render(f.matrix.at(i, j));
        out << "\n";
    }
    return out.str();
}

EllrcFile parse_ellrc(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    auto next = [&](const char* what) {
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return;
        }
        throw Error(ErrorKind::ParseError, std::string("unexpected end of file, expected ") + what);
    };
    auto keyword = [&](const char* key) {
        next(key);
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] != key) throw Error(ErrorKind::ParseError, std::string("expected ") + key);
        return tok;
    };

    auto head = keyword("ELLRC");
    if (head.size() != 2 || head[1] != "1") throw Error(ErrorKind::ParseError, "unsupported ELLRC version");
    next("FIELD");
    if (line.rfind("FIELD ", 0) != 0) throw Error(ErrorKind::ParseError, "expected FIELD");
    Field F = Field::parse_header(line.substr(6));
    auto ctok = keyword("CURVE");
    EllrcFile f(F, parse_curve_line(F, ctok, 1));
    auto code = keyword("CODE");
    if (code.size() != 6) throw Error(ErrorKind::ParseError, "CODE needs n k mode fiberSize m");
    f.n = to_size(code[1]);
    f.k = to_size(code[2]);
    f.mode = parse_code_mode(code[3]);
    f.fiber_size = to_size(code[4]);
    f.m = to_size(code[5]);
    auto loc = keyword("LOCALITY");
    if (f.mode == CodeMode::Single) {
        if (loc.size() != 2) throw Error(ErrorKind::ParseError, "LOCALITY r expected");
        f.localities = {static_cast<int>(to_size(loc[1]))};
    } else {
        if (loc.size() != 4) throw Error(ErrorKind::ParseError, "LOCALITY r1 r2 d0 expected");
        f.localities = {static_cast<int>(to_size(loc[1])), static_cast<int>(to_size(loc[2]))};
        f.d0 = to_int(loc[3]);
    }
    keyword("POINTS");
    for (std::size_t i = 0; i < f.n; ++i) {
        next("point");
        f.points.push_back(f.curve.parse_point(line));
    }
    keyword("MATRIX");
    f.matrix = Matrix(f.k, f.n);
    for (std::size_t i = 0; i < f.k; ++i) {
        next("matrix row");
        auto tok = split_ws(line);
        if (tok.size() != f.n) throw Error(ErrorKind::ParseError, "matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t j = 0; j < f.n; ++j) f.matrix.at(i, j) = F.parse(tok[j]);
    }
    while (std::getline(in, line)) {
        if (!split_ws(line).empty()) throw Error(ErrorKind::ParseError, "trailing content after MATRIX");
    }
    return f;
}

std::string write_json(const EllrcFile& f, const std::optional<Recipe>& recipe, const std::string& summary_json) {
    const Field& F = f.field;
    json j;
    j["format"] = "ellrc";
    j["version"] = 1;
    j["field"] = {{"p", F.characteristic()}, {"a", F.degree()}, {"modulus", F.modulus()}};
    json curve = json::array();
    for (Felt c : f.curve.coefficients()) curve.push_back(F.render(c));
    j["curve"] = curve;
    j["code"] = {{"n", f.n}, {"k", f.k}, {"mode", to_string(f.mode)}, {"fiber_size", f.fiber_size}, {"m", f.m},
                 {"localities", f.localities}};
    if (f.mode == CodeMode::Two) j["code"]["d0"] = f.d0;
    j["points"] = points_json(f.curve, f.points);
    json rows = json::array();
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < f.matrix.cols(); ++c) row.push_back(F.render(f.matrix.at(i, c)));
        rows.push_back(row);
    }
    j["matrix"] = rows;
    if (recipe) {
        json r;
        r["mode"] = to_string(recipe->mode);
        r["H"] = points_json(f.curve, recipe->H);
        r["m"] = recipe->m;
        r["exclude_torsion"] = recipe->exclude_torsion;
        r["seed"] = recipe->seed;
        if (recipe->mode == CodeMode::Single) {
            r["A"] = maps_json(F, recipe->A);
            r["t"] = recipe->t;
        } else {
            r["A1"] = maps_json(F, recipe->A1);
            r["A2"] = maps_json(F, recipe->A2);
            r["d0"] = recipe->d0;
        }
        j["recipe"] = r;
    }
    if (!summary_json.empty()) j["summary"] = json::parse(summary_json);
    return j.dump(1) + "\n";
}

JsonMirror parse_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (j.at("format") != "ellrc" || j.at("version") != 1) throw Error(ErrorKind::ParseError, "not an ellrc JSON mirror");
        const auto& fj = j.at("field");
        Field F = Field::with_modulus(fj.at("p").get<std::uint64_t>(), fj.at("modulus").get<std::vector<std::uint32_t>>());
        if (F.degree() != fj.at("a").get<unsigned>()) throw Error(ErrorKind::ParseError, "field degree mismatch");
        std::vector<std::string> ctok;
        for (const auto& c : j.at("curve")) ctok.push_back(c.get<std::string>());
        JsonMirror out{EllrcFile(F, parse_curve_line(F, ctok, 0)), std::nullopt};
        EllrcFile& f = out.file;
        const auto& cj = j.at("code");
        f.n = cj.at("n").get<std::size_t>();
        f.k = cj.at("k").get<std::size_t>();
        f.mode = parse_code_mode(cj.at("mode").get<std::string>());
        f.fiber_size = cj.at("fiber_size").get<std::size_t>();
        f.m = cj.at("m").get<std::size_t>();
        f.localities = cj.at("localities").get<std::vector<int>>();
        if (f.mode == CodeMode::Two) f.d0 = cj.at("d0").get<std::int64_t>();
        f.points = points_from_json(f.curve, j.at("points"));
        if (f.points.size() != f.n) throw Error(ErrorKind::ParseError, "point count != n");
        const auto& rows = j.at("matrix");
        if (rows.size() != f.k) throw Error(ErrorKind::ParseError, "matrix row count != k");
        f.matrix = Matrix(f.k, f.n);
        for (std::size_t i = 0; i < f.k; ++i) {
            if (rows[i].size() != f.n) throw Error(ErrorKind::ParseError, "matrix row length != n");
            for (std::size_t c = 0; c < f.n; ++c) f.matrix.at(i, c) = F.parse(rows[i][c].get<std::string>());
        }
        if (j.contains("recipe")) {
            const auto& rj = j.at("recipe");
            Recipe r;
            r.mode = parse_code_mode(rj.at("mode").get<std::string>());
            r.H = points_from_json(f.curve, rj.at("H"));
            r.m = rj.at("m").get<std::size_t>();
            r.exclude_torsion = rj.at("exclude_torsion").get<bool>();
            r.seed = rj.value("seed", std::uint64_t{0});
            if (r.mode == CodeMode::Single) {
                r.A = maps_from_json(F, rj.at("A"));
                r.t = rj.at("t").get<int>();
            } else {
                r.A1 = maps_from_json(F, rj.at("A1"));
                r.A2 = maps_from_json(F, rj.at("A2"));
                r.d0 = rj.at("d0").get<std::int64_t>();
            }
            out.recipe = std::move(r);
        }
        return out;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed ellrc JSON: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + path);
}

}  // namespace ellrc
