#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "arcmodel/arc_set.hpp"
#include "arcmodel/mutation.hpp"

namespace testsupport {

using arcmodel::Arc;
using arcmodel::DividerSet;
using arcmodel::ModelParams;

inline std::string data_path(const std::string& name) { return std::string(ARCMODEL_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Cell-walk oracle. Builds the boundary vertex cycle of the D-cell that
// contains a and steps one vertex along it. Only the part of the outer cell
// inside [lo, hi] is materialized.
class CellWalk {
public:
    CellWalk(const Arc& a, const std::set<Arc>& d)
    {
        int lo = std::min(a.t(), a.u()), hi = std::max(a.t(), a.u());
        for (const Arc& e : d) {
            lo = std::min(lo, e.t());
            hi = std::max(hi, e.u());
        }
        lo -= 3;
        hi += 3;

        std::optional<Arc> enclosing;
        for (const Arc& e : d)
            if (e != a && a.nested_in(e) && (!enclosing || e.nested_in(*enclosing)))
                enclosing = e;

        std::vector<Arc> inside;
        for (const Arc& e : d)
            if (e != a && (!enclosing || (e != *enclosing && e.nested_in(*enclosing))))
                inside.push_back(e);
        std::vector<Arc> children;
        for (const Arc& e : inside) {
            const bool covered = std::any_of(inside.begin(), inside.end(),
                                             [&](const Arc& f) { return f != e && e.nested_in(f); });
            if (!covered)
                children.push_back(e);
        }

        bounded_ = enclosing.has_value();
        const int from = bounded_ ? enclosing->t() : lo;
        const int to = bounded_ ? enclosing->u() : hi;
        for (int v = from; v <= to; ++v) {
            const bool hidden = std::any_of(children.begin(), children.end(),
                                            [&](const Arc& c) { return c.t() < v && v < c.u(); });
            if (!hidden)
                cycle_.push_back(v);
        }
    }

    int prev(int v) const
    {
        const auto it = std::find(cycle_.begin(), cycle_.end(), v);
        if (it == cycle_.begin())
            return bounded_ ? cycle_.back() : v - 1;
        return *(it - 1);
    }

    int next(int v) const
    {
        const auto it = std::find(cycle_.begin(), cycle_.end(), v);
        if (it + 1 == cycle_.end())
            return bounded_ ? cycle_.front() : v + 1;
        return *(it + 1);
    }

    bool on_boundary(int v) const { return std::find(cycle_.begin(), cycle_.end(), v) != cycle_.end(); }

private:
    bool bounded_ = false;
    std::vector<int> cycle_;
};

inline Arc random_admissible(std::mt19937& rng, int lo, int hi, int n)
{
    std::uniform_int_distribution<int> start(lo, hi - 2);
    for (;;) {
        const int t = start(rng);
        const int max_k = (hi - t - 1) / n;
        if (max_k < 1)
            continue;
        const int len = 1 + n * std::uniform_int_distribution<int>(1, max_k)(rng);
        if (len >= 2 && t + len <= hi)
            return Arc(t, t + len);
    }
}

struct FuzzCase {
    DividerSet d;
    Arc a;
};

// Random non-crossing divider sets of up to max_size arcs inside a span of
// 60, biased towards nesting by drawing shorter arcs inside existing ones.
inline std::optional<FuzzCase> random_case(std::mt19937& rng, int n, std::size_t max_size = 8)
{
    const int lo = -30, hi = 30;
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    const std::size_t target = size_dist(rng);
    std::vector<Arc> d;
    std::uniform_int_distribution<int> coin(0, 2);
    for (int attempt = 0; d.size() < target && attempt < 200; ++attempt) {
        Arc cand = random_admissible(rng, lo, hi, n);
        if (!d.empty() && coin(rng) == 0) {
            const Arc& host = d[std::uniform_int_distribution<std::size_t>(0, d.size() - 1)(rng)];
            if (host.length() > n + 2)
                cand = random_admissible(rng, host.t(), host.u(), n);
        }
        const bool ok = std::none_of(d.begin(), d.end(), [&](const Arc& e) { return e == cand || arcmodel::cross(e, cand); });
        if (ok)
            d.push_back(cand);
    }
    for (int attempt = 0; attempt < 400; ++attempt) {
        const Arc a = random_admissible(rng, lo, hi, n);
        const bool ok = std::none_of(d.begin(), d.end(), [&](const Arc& e) { return e == a || arcmodel::cross(e, a); });
        if (ok)
            return FuzzCase{DividerSet(ModelParams(n), d), a};
    }
    return std::nullopt;
}

// Draft-07 subset: type, enum, required, properties, items, $ref into
// #/definitions. Returns an empty string when valid, else the failing path.
class SchemaChecker {
public:
    explicit SchemaChecker(nlohmann::json schema) : root_(std::move(schema)) {}

    std::string check(const nlohmann::json& doc) const { return check(doc, root_, "$"); }

private:
    static bool type_matches(const nlohmann::json& v, const std::string& t)
    {
        if (t == "object")
            return v.is_object();
        if (t == "array")
            return v.is_array();
        if (t == "string")
            return v.is_string();
        if (t == "integer")
            return v.is_number_integer();
        if (t == "number")
            return v.is_number();
        if (t == "boolean")
            return v.is_boolean();
        if (t == "null")
            return v.is_null();
        return false;
    }

    std::string check(const nlohmann::json& v, const nlohmann::json& s, const std::string& path) const
    {
        if (s.contains("$ref")) {
            const std::string ref = s["$ref"];
            const std::string prefix = "#/definitions/";
            return check(v, root_["definitions"][ref.substr(prefix.size())], path);
        }
        if (s.contains("type")) {
            const auto& t = s["type"];
            bool ok = false;
            if (t.is_array()) {
                for (const auto& one : t)
                    ok = ok || type_matches(v, one.get<std::string>());
            } else {
                ok = type_matches(v, t.get<std::string>());
            }
            if (!ok)
                return path + ": wrong type";
        }
        if (s.contains("enum") && std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
            return path + ": not in enum";
        if (v.is_object()) {
            if (s.contains("required"))
                for (const auto& key : s["required"])
                    if (!v.contains(key.get<std::string>()))
                        return path + ": missing " + key.get<std::string>();
            if (s.contains("properties"))
                for (const auto& [key, sub] : s["properties"].items())
                    if (v.contains(key))
                        if (auto err = check(v[key], sub, path + "." + key); !err.empty())
                            return err;
        }
        if (v.is_array() && s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i)
                if (auto err = check(v[i], s["items"], path + "[" + std::to_string(i) + "]"); !err.empty())
                    return err;
        return {};
    }

    nlohmann::json root_;
};

} // namespace testsupport
