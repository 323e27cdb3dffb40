#include "zkmc/zkxjson.hpp"

#include <json.hpp>

namespace zkmc {

using nlohmann::json;

ExplicitSystem ZkxFile::system() const {
    if (!secret) throw Error("zkx: secret system data not present");
    ExplicitSystem sys;
    sys.num_states = pub.num_states;
    sys.labels = pub.labels;
    sys.init = secret->init;
    sys.trans = secret->trans;
    sys.validate();
    return sys;
}

ZkxFile zkx_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || j.value("version", 0) != 1) throw Error("zkx: unsupported version");
    ZkxFile f;
    auto props = j.at("props");
    for (const auto& p : props) f.pub.spec.props.push_back(p.get<std::string>());
    if (f.pub.spec.props.size() > 12) throw Error("zkx: too many atomic propositions");

    auto prop_index = [&](const std::string& name) -> size_t {
        for (size_t i = 0; i < f.pub.spec.props.size(); i++)
            if (f.pub.spec.props[i] == name) return i;
        throw Error("zkx: unknown proposition " + name);
    };

    for (const auto& lab : j.at("labels")) {
        Letter l = 0;
        for (const auto& p : lab) l |= Letter(1) << prop_index(p.get<std::string>());
        f.pub.labels.push_back(l);
    }
    f.pub.num_states = f.pub.labels.size();

    const auto& aut = j.at("automaton");
    for (const auto& q : aut.at("states")) f.pub.q_names.push_back(q.get<std::string>());
    f.pub.spec.num_q = uint32_t(f.pub.q_names.size());
    auto q_index = [&](const std::string& name) -> uint32_t {
        for (size_t i = 0; i < f.pub.q_names.size(); i++)
            if (f.pub.q_names[i] == name) return uint32_t(i);
        throw Error("zkx: unknown automaton state " + name);
    };
    for (const auto& q : aut.at("init")) f.pub.spec.init_q.push_back(q_index(q.get<std::string>()));
    for (const auto& t : aut.at("trans")) {
        BuchiTransition bt;
        bt.from = q_index(t.at("from").get<std::string>());
        bt.to = q_index(t.at("to").get<std::string>());
        bt.fair = t.value("fair", false);
        const auto& label = t.at("label");
        if (label.is_string() && label.get<std::string>() == "true") {
            bt.wildcard = true;
        } else {
            for (const auto& p : label) bt.letter |= Letter(1) << prop_index(p.get<std::string>());
        }
        f.pub.spec.trans.push_back(bt);
    }
    f.pub.spec.validate();

    const auto& rank = j.at("ranking");
    if (rank.size() != f.pub.num_states) throw Error("zkx: ranking not total on states");
    f.pub.ranking.num_states = f.pub.num_states;
    f.pub.ranking.num_q = f.pub.spec.num_q;
    for (const auto& row : rank) {
        if (row.size() != f.pub.spec.num_q) throw Error("zkx: ranking not total on Q");
        for (const auto& v : row) {
            if (v.is_string()) {
                if (v.get<std::string>() != "inf") throw Error("zkx: bad ranking value");
                f.pub.ranking.table.push_back(RankValue::infinity());
            } else {
                f.pub.ranking.table.push_back(RankValue::finite(v.get<uint64_t>()));
            }
        }
    }

    if (j.contains("init") || j.contains("transitions")) {
        ExplicitSecret sec;
        for (const auto& s : j.at("init")) sec.init.push_back(s.get<uint32_t>());
        for (const auto& t : j.at("transitions")) {
            if (!t.is_array() || t.size() != 2) throw Error("zkx: bad transition entry");
            sec.trans.push_back({t[0].get<uint32_t>(), t[1].get<uint32_t>()});
        }
        std::sort(sec.init.begin(), sec.init.end());
        std::sort(sec.trans.begin(), sec.trans.end());
        f.secret = std::move(sec);
        f.system();  // validates
    }
    return f;
}

std::string zkx_to_json(const ZkxFile& f, bool include_secret) {
    json j;
    j["version"] = 1;
    j["props"] = f.pub.spec.props;
    json labels = json::array();
    for (Letter l : f.pub.labels) {
        json lab = json::array();
        for (size_t i = 0; i < f.pub.spec.props.size(); i++)
            if ((l >> i) & 1) lab.push_back(f.pub.spec.props[i]);
        labels.push_back(lab);
    }
    j["labels"] = labels;
    json aut;
    aut["states"] = f.pub.q_names;
    json qinit = json::array();
    for (uint32_t q : f.pub.spec.init_q) qinit.push_back(f.pub.q_names[q]);
    aut["init"] = qinit;
    json trans = json::array();
    for (const auto& t : f.pub.spec.trans) {
        json tj;
        tj["from"] = f.pub.q_names[t.from];
        tj["to"] = f.pub.q_names[t.to];
        if (t.fair) tj["fair"] = true;
        if (t.wildcard) {
            tj["label"] = "true";
        } else {
            json lab = json::array();
            for (size_t i = 0; i < f.pub.spec.props.size(); i++)
                if ((t.letter >> i) & 1) lab.push_back(f.pub.spec.props[i]);
            tj["label"] = lab;
        }
        trans.push_back(tj);
    }
    aut["trans"] = trans;
    j["automaton"] = aut;
    json rank = json::array();
    for (size_t s = 0; s < f.pub.num_states; s++) {
        json row = json::array();
        for (size_t q = 0; q < f.pub.spec.num_q; q++) {
            const auto& v = f.pub.ranking.at(s, q);
            if (v.inf)
                row.push_back("inf");
            else
                row.push_back(v.v);
        }
        rank.push_back(row);
    }
    j["ranking"] = rank;
    if (include_secret) {
        if (!f.secret) throw Error("zkx: no secret data to serialize");
        j["init"] = f.secret->init;
        json ts = json::array();
        for (auto [a, b] : f.secret->trans) ts.push_back(json::array({a, b}));
        j["transitions"] = ts;
    }
    return j.dump(2);
}

}  // namespace zkmc
