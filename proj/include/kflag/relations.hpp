#pragma once

#include "kflag/generators.hpp"

#include <json.hpp>

#include <functional>
#include <string>
#include <vector>

namespace kflag {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Skip };
const char* status_str(Status s);

struct CheckResult {
    Status status = Status::Pass;
    Json witness;  // null unless failed
};

struct RelationInstance {
    std::string relation;
    Json params;
    std::function<CheckResult(const Model&)> check;
};

struct InstanceResult {
    std::string relation;
    Json params;
    Status status;
    Json witness;
};

struct RelationReport {
    std::string suite;
    int n = 0;
    int N = 0;
    int window = 0;
    std::string note;
    std::vector<InstanceResult> instances;

    int count(Status s) const;
    int checked() const { return count(Status::Pass) + count(Status::Fail); }
    bool ok() const { return count(Status::Fail) == 0; }
};

const std::vector<std::string>& relation_suites();
bool is_relation_suite(const std::string& suite);

std::vector<RelationInstance> enumerate_instances(const std::string& suite, int n, int N, int window);

// compare two sides as matrices; absolute-zero targets give Skip
CheckResult compare_sides(const Model& model, const OpMatrix& lhs, const OpMatrix& rhs);
CheckResult check_identity(const Model& model, const Composition& k, const Expr& lhs, const Expr& rhs);

RelationInstance identity_instance(std::string relation, Json params, Composition k, Expr lhs, Expr rhs);

std::vector<InstanceResult> run_instances(const Model& model, const std::vector<RelationInstance>& insts, int jobs);

// dispatches to relations, hecke and appendix suites
RelationReport run_suite(const std::string& suite, int n, int N, int window, int jobs = 1);

// whether every E/F letter of every term sits inside the generator ranges at its own source weight
bool within_generator_ranges(const Expr& e, const Composition& k);

Json report_json(const RelationReport& r);
std::string report_csv(const RelationReport& r);
std::string report_text(const RelationReport& r);

}
