#include "tapecalc/json_io.hpp"

#include "tapecalc/circuit.hpp"

namespace tapecalc {

using nlohmann::json;

json table_to_json(const FnTable& t) {
    json bits = json::array();
    for (std::uint64_t out : t.table)
        bits.push_back(bits_string(out, t.m));
    return json{{"n", t.n}, {"m", t.m}, {"table", bits}};
}

FnTable table_from_json(const json& j) {
    std::vector<std::uint64_t> table;
    for (const auto& s : j.at("table"))
        table.push_back(parse_bits(s.get<std::string>()));
    return FnTable(j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                   std::move(table));
}

namespace {

template <class B, typename FObj, typename FArr>
json matrix_json(const StochMatrix<B>& m, FObj&& obj, FArr&& arr) {
    json dom = json::array();
    for (const auto& u : m.dom())
        dom.push_back(obj(u));
    json cod = json::array();
    for (const auto& u : m.cod())
        cod.push_back(obj(u));
    json rows = json::array();
    for (std::size_t j = 0; j < m.rows(); ++j) {
        json row = json::array();
        for (std::size_t i = 0; i < m.cols(); ++i) {
            json cell = json::array();
            for (const auto& [f, w] : m.entry(j, i).weights())
                cell.push_back(json{{"arrow", arr(f)}, {"prob", w.str()}});
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return json{{"dom", dom}, {"cod", cod}, {"entries", rows}};
}

} // namespace

json matrix_to_json(const StochMatrix<Set2Base>& m) {
    return matrix_json(m, [](std::size_t n) { return n; },
                       [](const FnTable& f) { return table_to_json(f); });
}

json matrix_to_json(const StochMatrix<FreeMonoidBase>& m) {
    return matrix_json(m, [](FreeMonoidBase::Object) { return "*"; },
                       [](const std::string& w) { return w; });
}

std::shared_ptr<const Signature> signature_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("signature: invalid JSON: ") + e.what());
    }
    auto sig  = std::make_shared<Signature>();
    sig->name = j.value("name", "sig");
    for (const auto& s : j.at("sorts")) {
        std::string name = s.get<std::string>();
        if (name.size() != 1 || !std::isupper(static_cast<unsigned char>(name[0])))
            throw Error("signature: sorts are single uppercase letters, got '" + name + "'");
        sig->sorts.insert(name[0]);
    }
    for (const auto& [name, gt] : j.at("generators").items()) {
        Signature::GenType g{gt.at("ar").get<std::string>(), gt.at("coar").get<std::string>(),
                             false};
        if (!sig->valid_word(g.ar) || !sig->valid_word(g.coar))
            throw Error("signature: generator '" + name + "' uses undeclared sorts");
        sig->gens[name] = std::move(g);
    }
    return sig;
}

} // namespace tapecalc
