#include "matroidlab/io.hpp"

#include <fstream>

namespace matroidlab::io {

namespace {

std::vector<int> int_list(const json& j) {
    if (!j.is_array()) throw std::runtime_error("expected an array of integers");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

}  // namespace

matroid load_matroid(const json& j, int max_n) {
    if (!j.is_object() || !j.contains("type")) throw std::runtime_error("matroid object needs a type");
    std::string type = j.at("type").get<std::string>();
    matroid m = [&]() -> matroid {
        if (type == "uniform") return matroid::uniform(j.at("rank").get<int>(), j.at("size").get<int>());
        if (type == "graphic") {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : j.at("edges")) {
                auto pair = int_list(e);
                if (pair.size() != 2) throw std::runtime_error("edge needs two endpoints");
                edges.emplace_back(pair[0], pair[1]);
            }
            return matroid::graphic(j.at("vertices").get<int>(), std::move(edges));
        }
        if (type == "linear") {
            std::vector<std::vector<int>> rows;
            for (const auto& r : j.at("matrix")) rows.push_back(int_list(r));
            return matroid::linear(j.at("field").get<int>(), std::move(rows));
        }
        if (type == "relax") {
            matroid base = load_matroid(j.at("base"), max_n);
            return base.relaxed(base.indices_of(int_list(j.at("set"))));
        }
        if (type == "minor") {
            matroid base = load_matroid(j.at("base"), max_n);
            return base.minor({base.indices_of(int_list(j.at("contract"))),
                               base.indices_of(int_list(j.at("delete")))});
        }
        if (type == "dual") return load_matroid(j.at("base"), max_n).dual();
        throw std::runtime_error("unknown matroid type: " + type);
    }();
    if (m.size() > max_n) throw std::runtime_error("ground set exceeds the size cap");
    if (j.contains("labels")) return m.relabeled(int_list(j.at("labels")));
    return m;
}

matroid load_matroid_file(const std::string& path, int max_n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return load_matroid(j, max_n);
}

json labels_json(const matroid& host, subset s) {
    json out = json::array();
    for (int l : host.labels_of(s)) out.push_back(l);
    return out;
}

subset labels_from_json(const matroid& host, const json& j) {
    return host.indices_of(int_list(j));
}

json minor_spec_to_json(const matroid& host, const minor_spec& spec) {
    return {{"contract", labels_json(host, spec.contract)}, {"delete", labels_json(host, spec.del)}};
}

minor_spec minor_spec_from_json(const matroid& host, const json& j) {
    return {labels_from_json(host, j.at("contract")), labels_from_json(host, j.at("delete"))};
}

json tangle_to_json(const tangle& t) {
    json members = json::array();
    for (subset s : t.members) members.push_back(labels_json(t.host, s));
    return {{"order", t.order}, {"members", members}};
}

std::vector<subset> tangle_members_from_json(const matroid& host, const json& j) {
    std::vector<subset> out;
    for (const auto& m : j.at("members")) out.push_back(labels_from_json(host, m));
    return out;
}

json decomposition_to_json(const matroid& host, const bd_node& root) {
    if (root.leaf()) return host.label_of(root.element);
    return json::array({decomposition_to_json(host, root.kids[0]),
                        decomposition_to_json(host, root.kids[1])});
}

bd_node decomposition_from_json(const matroid& host, const json& j) {
    bd_node out;
    if (j.is_number_integer()) {
        out.element = host.index_of(j.get<int>());
        return out;
    }
    if (!j.is_array() || j.size() != 2) throw std::runtime_error("malformed decomposition node");
    out.kids.push_back(decomposition_from_json(host, j[0]));
    out.kids.push_back(decomposition_from_json(host, j[1]));
    return out;
}

json removal_result_to_json(const matroid& host, const removal_result& r) {
    return {{"set", labels_json(host, r.set)}, {"op", to_string(r.op)}};
}

removal_result removal_result_from_json(const matroid& host, const json& j) {
    removal_result out;
    out.set = labels_from_json(host, j.at("set"));
    out.op = j.at("op").get<std::string>() == "delete" ? removal_op::del : removal_op::contract;
    return out;
}

}  // namespace matroidlab::io
