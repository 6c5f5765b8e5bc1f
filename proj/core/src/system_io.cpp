#include "pvi/system_io.hpp"

#include "pvi/error.hpp"
#include "pvi/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace pvi {

namespace {

using nlohmann::json;

json expr(const RationalFunction &f) { return to_string(f); }

json matrix_json(const Matrix &m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(expr(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalFunction read_expr(const json &j, const char *what)
{
    if (!j.is_string()) throw Error(std::string(what) + ": expected an expression string");
    return parse(j.get<std::string>());
}

Matrix read_matrix(const json &j, const char *what)
{
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(std::string(what) + ": expected a matrix");
    Matrix m(j.size(), j[0].size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) throw Error(std::string(what) + ": ragged matrix");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = read_expr(j[i][k], what);
    }
    return m;
}

const json &field(const json &doc, const char *key)
{
    if (!doc.is_object() || !doc.contains(key)) throw Error(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(std::string("invalid JSON: ") + e.what());
    }
}

void collect(std::set<std::string> &vars, const RationalFunction &f)
{
    for (const auto &v : f.variables()) vars.insert(v);
}

} // namespace

std::string write_system(const FuchsianSystem &system)
{
    std::set<std::string> vars;
    json sing = json::array();
    for (const auto &s : system.singularities) {
        collect(vars, s);
        sing.push_back(expr(s));
    }
    for (std::size_t i = 0; i < system.matrix.rows(); ++i) {
        for (std::size_t j = 0; j < system.matrix.cols(); ++j) collect(vars, system.matrix(i, j));
    }
    vars.erase(system.z);
    json doc;
    doc["variables"] = std::vector<std::string>(vars.begin(), vars.end());
    doc["z"] = system.z;
    doc["singularities"] = std::move(sing);
    doc["matrix"] = matrix_json(system.matrix);
    return doc.dump(2) + "\n";
}

FuchsianSystem read_system(const std::string &text)
{
    const json doc = parse_json(text);
    FuchsianSystem out;
    if (doc.contains("z")) {
        if (!doc["z"].is_string()) throw Error("\"z\" must be a string");
        out.z = doc["z"].get<std::string>();
    }
    const json &sing = field(doc, "singularities");
    if (!sing.is_array()) throw Error("\"singularities\" must be an array");
    for (const auto &s : sing) out.singularities.push_back(read_expr(s, "singularities"));
    out.matrix = read_matrix(field(doc, "matrix"), "matrix");
    return out;
}

std::string write_schlesinger(const SchlesingerFile &file)
{
    const SchlesingerSystem &s = file.system;
    if (!s.normalized) throw MathError("only normalized systems (t, 0, 1) are written");
    json doc;
    doc["t"] = expr(s.points[0]);
    json th = json::array(), q = json::array();
    for (const auto &x : file.theta) th.push_back(expr(x));
    for (const auto &r : s.residues) q.push_back(matrix_json(r));
    doc["theta"] = std::move(th);
    doc["Q"] = std::move(q);
    doc["lambda"] = expr(file.lambda);
    doc["mu"] = expr(file.mu);
    return doc.dump(2) + "\n";
}

SchlesingerFile read_schlesinger(const std::string &text)
{
    const json doc = parse_json(text);
    SchlesingerFile out;
    SchlesingerSystem &s = out.system;
    s.points = {read_expr(field(doc, "t"), "t"), RationalFunction(), RationalFunction(1)};
    s.normalized = true;
    s.degenerate = s.points[0] == RationalFunction(1);
    const json &q = field(doc, "Q");
    if (!q.is_array() || q.size() != 3) throw Error("\"Q\" must hold three 2x2 matrices");
    for (std::size_t i = 0; i < 3; ++i) {
        s.residues[i] = read_matrix(q[i], "Q");
        if (s.residues[i].rows() != 2 || s.residues[i].cols() != 2) throw Error("\"Q\" entries must be 2x2");
    }
    const json &th = field(doc, "theta");
    if (!th.is_array() || th.size() != 4) throw Error("\"theta\" must hold four expressions");
    for (std::size_t i = 0; i < 4; ++i) out.theta[i] = read_expr(th[i], "theta");
    if (doc.contains("lambda")) out.lambda = read_expr(doc["lambda"], "lambda");
    if (doc.contains("mu")) out.mu = read_expr(doc["mu"], "mu");
    try {
        s.lambda1 = apparent_point(s, 1);
        s.lambda2 = apparent_point(s, 2);
    } catch (const MathError &) {
    }
    return out;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

} // namespace pvi
