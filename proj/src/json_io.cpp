#include "romik/json_io.hpp"

#include "romik/error.hpp"

#include <string>

namespace romik {

namespace {

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()), 10);
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) {
            throw ParseError("bad integer " + j.dump());
        }
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational, got " + j.dump());
}

}  // namespace

Json to_json(const QFE& x) {
    return Json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", x.d().get_str()}};
}

Json to_json(const Vec3& v) { return Json::array({to_json(v[0]), to_json(v[1]), to_json(v[2])}); }

Json to_json(const Mat3& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < 3; ++r) {
        rows.push_back(Json::array({to_json(m(r, 0)), to_json(m(r, 1)), to_json(m(r, 2))}));
    }
    return rows;
}

Json to_json(const CirclePoint& p) { return Json{{"x", to_json(p.x())}, {"y", to_json(p.y())}}; }

Json to_json(const Word& w) {
    Json a = Json::array();
    for (Digit d : w) a.push_back(to_int(d));
    return a;
}

Json to_json(const RationalExpansion& e) {
    return Json{{"prefix", to_json(e.prefix)}, {"tail", e.tail == Tail::ones ? "ONES" : "THREES"}};
}

Json to_json(const Triple& t) {
    return Json{{"a", t.a().get_str()}, {"b", t.b().get_str()}, {"c", t.c().get_str()}};
}

Json to_json(const ExpansionResult& r) {
    return Json{{"preperiod", to_json(r.preperiod)}, {"period", to_json(r.period)}};
}

Json to_json(const PeriodicPointData& p) {
    return Json{{"word", to_json(p.word)},
                {"point", to_json(p.point)},
                {"lambda1", to_json(p.lambda1)},
                {"lambda2", to_json(p.lambda2)},
                {"lambda3", p.lambda3},
                {"d", p.d.get_str()},
                {"discriminant", p.discriminant.get_str()},
                {"matrix", to_json(p.matrix)},
                {"v1", to_json(p.v1)},
                {"v2", to_json(p.v2)},
                {"v3", to_json(p.v3)}};
}

Json to_json(const GaloisReport& g) {
    return Json{{"word", to_json(g.word)},
                {"conjugate", to_json(g.conjugate)},
                {"expected_signs", g.expected_signs},
                {"actual_signs", g.actual_signs},
                {"target", to_json(g.target)},
                {"detected", to_json(g.detected)},
                {"signs_ok", g.signs_ok},
                {"period_ok", g.period_ok},
                {"passed", g.passed()}};
}

Json to_json(const CircularRoot& r) {
    Json classes = Json::array();
    for (const auto& c : r.classes) {
        classes.push_back(Json{{"representative", to_json(c.representative)}, {"period", to_json(c.period)}});
    }
    Json edges = Json::array();
    for (const auto& e : r.edges) {
        edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"label", "M" + std::to_string(to_int(e.label))}});
    }
    Json out{{"d", r.d.get_str()}};
    out["unit"] = r.unit ? to_json(r.unit->value) : Json(nullptr);
    out["classes"] = std::move(classes);
    out["edges"] = std::move(edges);
    return out;
}

QFE qfe_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("a")) {
        throw ParseError("expected a QFE object, got " + j.dump());
    }
    const Rational a = rational_from_json(j.at("a"));
    const Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(0);
    const Integer d = j.contains("d") ? integer_from_json(j.at("d")) : Integer(0);
    try {
        return QFE(a, b, d);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

Vec3 vec3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected 3 coordinates, got " + j.dump());
    return Vec3(qfe_from_json(j[0]), qfe_from_json(j[1]), qfe_from_json(j[2]));
}

Mat3 mat3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected 3 rows, got " + j.dump());
    Mat3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        const Vec3 row = vec3_from_json(j[r]);
        for (std::size_t c = 0; c < 3; ++c) m(r, c) = row[c];
    }
    return m;
}

CirclePoint point_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
        throw ParseError("expected {\"x\", \"y\"}, got " + j.dump());
    }
    try {
        return CirclePoint(qfe_from_json(j.at("x")), qfe_from_json(j.at("y")));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace romik
