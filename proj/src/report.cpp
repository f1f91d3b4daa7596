#include "kflag/relations.hpp"

#include <sstream>

namespace kflag {

namespace {

Json summary_of(const std::vector<InstanceResult>& xs) {
    int pass = 0, fail = 0, skip = 0;
    for (auto& x : xs) {
        if (x.status == Status::Pass) ++pass;
        if (x.status == Status::Fail) ++fail;
        if (x.status == Status::Skip) ++skip;
    }
    Json s;
    s["checked"] = pass + fail;
    s["passed"] = pass;
    s["failed"] = fail;
    s["skipped"] = skip;
    return s;
}

std::string params_flat(const Json& p) {
    std::string out;
    for (auto it = p.begin(); it != p.end(); ++it) {
        if (!out.empty()) out += ";";
        out += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}

Json report_json(const RelationReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["n"] = r.n;
    j["N"] = r.N;
    j["window"] = r.window;
    if (!r.note.empty()) j["note"] = r.note;
    Json arr = Json::array();
    std::vector<InstanceResult> in_range, extended;
    for (auto& x : r.instances) {
        Json e;
        e["relation"] = x.relation;
        e["params"] = x.params;
        e["status"] = status_str(x.status);
        if (!x.witness.is_null()) e["witness"] = x.witness;
        arr.push_back(std::move(e));
        if (x.params.contains("in_range")) (x.params["in_range"].get<bool>() ? in_range : extended).push_back(x);
    }
    j["instances"] = std::move(arr);
    j["summary"] = summary_of(r.instances);
    if (!in_range.empty() || !extended.empty()) {
        j["summary"]["in_range"] = summary_of(in_range);
        j["summary"]["extended"] = summary_of(extended);
    }
    return j;
}

std::string report_csv(const RelationReport& r) {
    std::ostringstream os;
    os << "suite,relation,params,status\n";
    for (auto& x : r.instances)
        os << csv_field(r.suite) << ',' << csv_field(x.relation) << ',' << csv_field(params_flat(x.params)) << ','
           << status_str(x.status) << '\n';
    return os.str();
}

std::string report_text(const RelationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << "  n=" << r.n << " N=" << r.N << " window=" << r.window << '\n';
    if (!r.note.empty()) os << "note: " << r.note << '\n';
    for (auto& x : r.instances) {
        if (x.status != Status::Fail) continue;
        os << "FAIL " << x.relation << " " << params_flat(x.params) << "  witness " << x.witness.dump() << '\n';
    }
    os << "checked " << r.checked() << "  passed " << r.count(Status::Pass) << "  failed " << r.count(Status::Fail)
       << "  skipped " << r.count(Status::Skip) << '\n';
    return os.str();
}

}
