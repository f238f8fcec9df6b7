#include "zec/json_io.hpp"

#include <fstream>

namespace zec {

std::string method_name(Method m) {
    switch (m) {
        case Method::Exact: return "exact";
        case Method::Numeric: return "numeric";
        case Method::ByConstruction: return "by-construction";
        case Method::TheoryCited: return "theory-cited";
    }
    return "unknown";
}

namespace {

Method method_from_name(const std::string& s) {
    if (s == "exact") return Method::Exact;
    if (s == "numeric") return Method::Numeric;
    if (s == "by-construction") return Method::ByConstruction;
    if (s == "theory-cited") return Method::TheoryCited;
    throw std::invalid_argument("unknown certificate method: " + s);
}

Json entries_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (long r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (long c = 0; c < m.cols(); ++c)
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix entries_from_json(const Json& rows) {
    const long nr = static_cast<long>(rows.size());
    const long nc = nr ? static_cast<long>(rows[0].size()) : 0;
    Matrix m(nr, nc);
    for (long r = 0; r < nr; ++r)
        for (long c = 0; c < nc; ++c)
            m(r, c) = Cplx(rows[r][c][0].get<double>(), rows[r][c][1].get<double>());
    return m;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_to_json(m)}};
}

Matrix matrix_from_json(const Json& j) { return entries_from_json(j.at("entries")); }

Json vector_to_json(const Vector& v) {
    Json a = Json::array();
    for (long i = 0; i < v.size(); ++i) a.push_back(Json::array({v(i).real(), v(i).imag()}));
    return a;
}

Vector vector_from_json(const Json& j) {
    Vector v(static_cast<long>(j.size()));
    for (long i = 0; i < v.size(); ++i) v(i) = Cplx(j[i][0].get<double>(), j[i][1].get<double>());
    return v;
}

Json subspace_to_json(const StateSubspace& s) {
    Json basis = Json::array();
    for (int c = 0; c < s.dim(); ++c) basis.push_back(vector_to_json(s.basis.col(c)));
    return Json{{"d_A", s.d_a}, {"d_B", s.d_b}, {"basis", std::move(basis)}};
}

StateSubspace subspace_from_json(const Json& j) {
    const int da = j.at("d_A").get<int>();
    const int db = j.at("d_B").get<int>();
    const Json& basis = j.at("basis");
    Matrix raw(static_cast<long>(da) * db, static_cast<long>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c) raw.col(static_cast<long>(c)) = vector_from_json(basis[c]);
    return make_subspace(raw, da, db);
}

Json channel_to_json(const Channel& e) {
    Json kraus = Json::array();
    for (const Matrix& k : e.kraus) kraus.push_back(entries_to_json(k));
    return Json{{"d_A", e.d_a}, {"d_B", e.d_b}, {"kraus", std::move(kraus)}};
}

Channel channel_from_json(const Json& j) {
    Channel e;
    e.d_a = j.at("d_A").get<int>();
    e.d_b = j.at("d_B").get<int>();
    for (const Json& k : j.at("kraus")) e.kraus.push_back(entries_from_json(k));
    return e;
}

Json choi_to_json(const ChoiMatrix& s) {
    return Json{{"d_A", s.d_a},
                {"d_B", s.d_b},
                {"kind", s.kind == ChoiKind::Standard ? "standard" : "non-standard"},
                {"matrix", entries_to_json(s.m)}};
}

ChoiMatrix choi_from_json(const Json& j) {
    ChoiMatrix s;
    s.d_a = j.at("d_A").get<int>();
    s.d_b = j.at("d_B").get<int>();
    s.kind = j.at("kind").get<std::string>() == "standard" ? ChoiKind::Standard
                                                          : ChoiKind::NonStandard;
    s.m = entries_from_json(j.at("matrix"));
    return s;
}

Json certificate_to_json(const Certificate& c) {
    Json conds = Json::array();
    for (const auto& e : c.conditions)
        conds.push_back(Json{{"id", e.id},
                             {"description", e.description},
                             {"method", method_name(e.method)},
                             {"passed", e.passed},
                             {"certified", e.certified},
                             {"evidence", e.evidence}});
    return Json{{"schema_version", c.schema_version},
                {"instance", c.instance},
                {"tool_version", c.tool_version},
                {"dims", Json{{"d_A", c.d_a}, {"d_E", c.d_e}, {"d_B", c.d_b}}},
                {"seed", c.seed},
                {"conditions", std::move(conds)}};
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.schema_version = j.at("schema_version").get<int>();
    c.instance = j.at("instance").get<std::string>();
    c.tool_version = j.at("tool_version").get<std::string>();
    c.d_a = j.at("dims").at("d_A").get<int>();
    c.d_e = j.at("dims").at("d_E").get<int>();
    c.d_b = j.at("dims").at("d_B").get<int>();
    c.seed = j.at("seed").get<uint64_t>();
    for (const Json& e : j.at("conditions")) {
        ConditionEntry entry;
        entry.id = e.at("id").get<std::string>();
        entry.description = e.at("description").get<std::string>();
        entry.method = method_from_name(e.at("method").get<std::string>());
        entry.passed = e.at("passed").get<bool>();
        entry.certified = e.value("certified", true);
        entry.evidence = e.at("evidence").get<std::string>();
        c.conditions.push_back(std::move(entry));
    }
    return c;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << j.dump(2) << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return Json::parse(f);
}

}  // namespace zec
