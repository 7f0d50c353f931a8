#include "nilcone/serialize.hpp"

#include <charconv>

namespace nilcone {

namespace {

json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi)
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& v) {
    if (v.is_number_integer())
        return Int(v.get<std::int64_t>());
    if (v.is_string())
        return Int(v.get<std::string>());
    throw ParseError("expected an integer, got " + v.dump());
}

long long ll_from_json(const json& v) {
    if (!v.is_number_integer())
        throw ParseError("expected an integer, got " + v.dump());
    return v.get<long long>();
}

} // namespace

json json_partition(const Partition& p) {
    return json(p.parts());
}

json json_class(const ClassVector& a) {
    return json::array({a.rank, a.degree});
}

json json_hn(const HNType& h) {
    json out = json::array();
    for (const auto& f : h.factors())
        out.push_back(json_class(f));
    return out;
}

json json_multipartition(const MultiPartition& mp) {
    json out = json::array();
    for (const auto& p : mp)
        out.push_back(json_partition(p));
    return out;
}

json json_component(const ComponentLabel& c) {
    return json{{"hn", json_hn(c.hn)}, {"lambda", json_multipartition(c.lambda)}};
}

json json_jordan(const JordanType& j) {
    json out = json::array();
    for (const auto& e : j.entries)
        out.push_back(json_class(e));
    return out;
}

json json_matrix(const IntegerMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.rows()) {
        json r = json::array();
        for (const auto& v : row)
            r.push_back(json_int(v));
        rows.push_back(std::move(r));
    }
    return json{{"order", m.labels()}, {"rows", std::move(rows)}};
}

json json_cc_block(const CCBlock& b) {
    return json{{"hn", json_hn(b.hn)}, {"matrix", json_matrix(b.matrix)}};
}

json json_truncated(const TruncatedCCMatrix& t) {
    json comps = json::array();
    for (const auto& c : t.components())
        comps.push_back(json_component(c));
    json blocks = json::array();
    for (const auto& b : t.blocks())
        blocks.push_back(json_cc_block(b));
    return json{{"components", std::move(comps)},
                {"blocks", std::move(blocks)},
                {"unknown_mask", "lower-cross-stratum"}};
}

json parse_json(const std::string& text) {
    json v = json::parse(text, nullptr, false);
    if (v.is_discarded())
        throw ParseError("malformed JSON: " + text);
    return v;
}

ClassVector parse_class(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("class syntax is \"r,d\": " + text);
    auto number = [&](std::string_view s) {
        long long out = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec != std::errc() || p != s.data() + s.size())
            throw ParseError("bad integer \"" + std::string(s) + "\" in class " + text);
        return out;
    };
    std::string_view sv = text;
    return {number(sv.substr(0, comma)), number(sv.substr(comma + 1))};
}

Partition partition_from_json(const json& v) {
    if (!v.is_array())
        throw ParseError("partition must be an array: " + v.dump());
    std::vector<int> parts;
    for (const auto& e : v)
        parts.push_back(static_cast<int>(ll_from_json(e)));
    try {
        return Partition(std::move(parts));
    } catch (const InvalidPartition& e) {
        throw ParseError(e.what());
    }
}

ClassVector class_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError("class must be [r,d]: " + v.dump());
    return {ll_from_json(v[0]), ll_from_json(v[1])};
}

std::vector<ClassVector> class_list_from_json(const json& v) {
    if (!v.is_array())
        throw ParseError("expected an array of classes: " + v.dump());
    std::vector<ClassVector> out;
    for (const auto& e : v)
        out.push_back(class_from_json(e));
    return out;
}

HNType hn_from_json(const json& v) {
    return HNType(class_list_from_json(v));
}

MultiPartition multipartition_from_json(const json& v) {
    if (!v.is_array())
        throw ParseError("multipartition must be an array: " + v.dump());
    MultiPartition out;
    for (const auto& e : v)
        out.push_back(partition_from_json(e));
    return out;
}

ComponentLabel component_from_json(const json& v) {
    if (!v.is_object() || !v.contains("hn") || !v.contains("lambda"))
        throw ParseError("component must be {\"hn\":...,\"lambda\":...}: " + v.dump());
    return ComponentLabel(hn_from_json(v["hn"]), multipartition_from_json(v["lambda"]));
}

IntegerMatrix matrix_from_json(const json& v) {
    if (!v.is_object() || !v.contains("order") || !v.contains("rows"))
        throw ParseError("matrix must be {\"order\":...,\"rows\":...}: " + v.dump());
    std::vector<std::string> labels;
    for (const auto& e : v["order"]) {
        if (!e.is_string())
            throw ParseError("matrix labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::vector<Int>> rows;
    for (const auto& r : v["rows"]) {
        std::vector<Int> row;
        for (const auto& e : r)
            row.push_back(int_from_json(e));
        rows.push_back(std::move(row));
    }
    return IntegerMatrix(std::move(labels), std::move(rows));
}

std::string csv_matrix(const IntegerMatrix& m) {
    std::string out;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j)
            out += ',';
        out += m.labels()[j];
    }
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j)
                out += ',';
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string csv_truncated(const TruncatedCCMatrix& t) {
    std::string out;
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (j)
            out += ',';
        out += t.components()[j].str();
    }
    out += '\n';
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (j)
                out += ',';
            if (t.kind(i, j) == TruncatedCCMatrix::Kind::Unknown)
                out += '?';
            else
                out += t.entry(i, j).str();
        }
        out += '\n';
    }
    return out;
}

std::string export_hasse(const std::vector<std::string>& labels,
                         const std::function<bool(std::size_t, std::size_t)>& leq) {
    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lt[i][j] = i != j && leq(i, j);
    std::string out = "digraph hasse {\n";
    for (std::size_t i = 0; i < n; ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt[i][j])
                continue;
            bool covered = true;
            for (std::size_t k = 0; k < n; ++k)
                if (lt[i][k] && lt[k][j]) {
                    covered = false;
                    break;
                }
            if (covered)
                out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
        }
    out += "}\n";
    return out;
}

} // namespace nilcone
