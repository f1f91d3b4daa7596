#include "kflag/cli.hpp"

#include "kflag/hecke.hpp"
#include "kflag/relations.hpp"
#include "kflag/selftest.hpp"
#include "kflag/series.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kflag {

int size_cap() {
    const char* v = std::getenv("KFLAG_MAX_N");
    if (!v || !*v) return 6;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return 6;
    }
}

namespace {

struct RunConfig {
    int n = 0;  // 0: not given
    int N = 0;
    std::string weight;
    std::string suite;
    int window = -1;
    std::string op;
    std::string format = "json";
    std::string output;
    int jobs = 1;
    int max_N = 5;
    std::string f = "1";
    std::string g = "1";
};

void check_size(int N) {
    if (N > size_cap())
        throw InvalidParameter("N=" + std::to_string(N) + " exceeds the size cap " + std::to_string(size_cap()) +
                               " (raise KFLAG_MAX_N to allow)");
    if (N > kMaxVars) throw InvalidParameter("N above " + std::to_string(kMaxVars) + " is not supported");
}

Composition parse_weight(const RunConfig& c) {
    if (c.weight.empty()) throw InvalidParameter("--weight is required");
    Composition k = Composition::parse(c.weight);
    if (c.N && c.N != k.N()) throw InvalidParameter("weight " + k.str() + " does not sum to N=" + std::to_string(c.N));
    if (c.n && c.n != k.n()) throw InvalidParameter("weight " + k.str() + " does not have n=" + std::to_string(c.n) + " parts");
    check_size(k.N());
    return k;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw InvalidParameter("cannot open output file '" + c.output + "'");
    f << text;
}

Json labels_json(const WeightBasis& b) {
    Json arr = Json::array();
    for (auto& l : b.labels) arr.push_back(l);
    return arr;
}

std::string matrix_text(const Matrix& m) {
    std::ostringstream os;
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) os << (c ? " " : "") << format_rational(m(r, c));
        os << '\n';
    }
    return os.str();
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    if (!is_relation_suite(c.suite)) throw InvalidParameter("unknown suite '" + c.suite + "'");
    const int n = c.n ? c.n : 2, N = c.N ? c.N : 2;
    check_size(N);
    int window = c.window >= 0 ? c.window : (c.suite == "appendix" ? 3 : 0);
    RelationReport rep = run_suite(c.suite, n, N, window, c.jobs);
    std::string text;
    if (c.format == "json") text = report_json(rep).dump(2) + "\n";
    else if (c.format == "csv") text = report_csv(rep);
    else text = report_text(rep);
    emit(c, text, out);
    return rep.ok() ? kOk : kFailures;
}

int cmd_op_matrix(const RunConfig& c, std::ostream& out) {
    Composition k = parse_weight(c);
    if (c.op.empty()) throw InvalidParameter("--op is required");
    Word w = parse_word(c.op);
    for (auto& g : w)
        if (g.i >= k.n()) throw InvalidParameter("node index out of range in '" + g.str() + "'");
    Model model(k.N());
    OpMatrix m = model.word_matrix(w, k);
    if (!m.target) throw InvalidParameter("operator leaves the weight lattice at " + k.str());
    const WeightBasis& src = model.basis(k);
    const WeightBasis& dst = model.basis(*m.target);
    std::string text;
    if (c.format == "json") {
        Json j;
        j["op"] = word_str(w);
        j["source"] = k.str();
        j["target"] = m.target->str();
        j["row_basis"] = labels_json(dst);
        j["col_basis"] = labels_json(src);
        Json rows = Json::array();
        for (int r = 0; r < m.m.rows(); ++r) {
            Json row = Json::array();
            for (int cc = 0; cc < m.m.cols(); ++cc) row.push_back(format_rational(m.m(r, cc)));
            rows.push_back(row);
        }
        j["matrix"] = rows;
        text = j.dump(2) + "\n";
    } else if (c.format == "csv") {
        std::ostringstream os;
        for (int r = 0; r < m.m.rows(); ++r) {
            for (int cc = 0; cc < m.m.cols(); ++cc) os << (cc ? "," : "") << format_rational(m.m(r, cc));
            os << '\n';
        }
        text = os.str();
    } else {
        text = word_str(w) + " : " + k.str() + " -> " + m.target->str() + "\n" + matrix_text(m.m);
    }
    emit(c, text, out);
    return kOk;
}

int cmd_basis(const RunConfig& c, std::ostream& out) {
    Composition k = parse_weight(c);
    Model model(k.N());
    const WeightBasis& b = model.basis(k);
    std::string text;
    if (c.format == "json") {
        Json j;
        j["weight"] = k.str();
        j["N"] = k.N();
        j["dimension"] = b.size();
        Json els = Json::array();
        for (int t = 0; t < b.size(); ++t) {
            Json e;
            e["label"] = b.labels[t];
            e["poly"] = format_poly(b.elements[t]);
            els.push_back(e);
        }
        j["elements"] = els;
        text = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (int t = 0; t < b.size(); ++t) {
            Json l = b.labels[t];
            os << l.dump() << (c.format == "csv" ? "," : "  ") << format_poly(b.elements[t]) << '\n';
        }
        text = os.str();
    }
    emit(c, text, out);
    return kOk;
}

int cmd_pairing(const RunConfig& c, std::ostream& out) {
    Composition k = parse_weight(c);
    Model model(k.N());
    const Ring& ring = model.ring();
    PolyElem f = ring.normal_form(parse_poly(c.f, k.N()));
    PolyElem g = ring.normal_form(parse_poly(c.g, k.N()));
    // both classes must live in the weight space
    model.coords(k, f);
    model.coords(k, g);
    Rational v = model.euler_pairing(k, f, g);
    std::string text;
    if (c.format == "json") {
        Json j;
        j["weight"] = k.str();
        j["f"] = format_poly(f);
        j["g"] = format_poly(g);
        j["pairing"] = format_rational(v);
        text = j.dump(2) + "\n";
    } else {
        text = format_rational(v) + "\n";
    }
    emit(c, text, out);
    return kOk;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
    if (c.max_N < 2) throw InvalidParameter("--max-N must be at least 2");
    check_size(c.max_N);
    if (const char* fault = std::getenv("KFLAG_SELFTEST_FAULT"); fault && *fault && std::string(fault) != "0")
        throw InternalError("injected selftest fault");
    auto checks = run_selftest(c.max_N);
    bool ok = true;
    std::ostringstream os;
    for (auto& ch : checks) {
        os << (ch.ok ? "ok   " : "FAIL ") << ch.name << " N=" << ch.N;
        if (!ch.ok) os << "  " << ch.detail;
        os << '\n';
        ok = ok && ch.ok;
    }
    emit(c, os.str(), out);
    if (!ok) throw InternalError("selftest invariant violated");
    return kOk;
}

}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-theoretic operators on partial flag varieties"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* s) {
        s->add_option("-n", c.n, "number of parts")->check(CLI::Range(2, 64));
        s->add_option("-N", c.N, "ambient dimension")->check(CLI::Range(2, 64));
        s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("-o,--output", c.output, "output file");
    };
    auto* verify = app.add_subcommand("verify", "run a relation suite");
    add_common(verify);
    verify->add_option("--suite", c.suite, "suite id")->required();
    verify->add_option("--window", c.window, "mode window")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1, 256));

    auto* opm = app.add_subcommand("op-matrix", "matrix of an operator word");
    add_common(opm);
    opm->add_option("--weight", c.weight, "source weight, e.g. 1,1")->required();
    opm->add_option("--op", c.op, "operator word, e.g. E[1,0]*F[1,0]")->required();

    auto* bas = app.add_subcommand("basis", "basis of a weight space");
    add_common(bas);
    bas->add_option("--weight", c.weight, "weight")->required();

    auto* pair = app.add_subcommand("pairing", "Euler pairing of two classes");
    add_common(pair);
    pair->add_option("--weight", c.weight, "weight")->required();
    pair->add_option("--f", c.f, "first class, x-polynomial");
    pair->add_option("--g", c.g, "second class, x-polynomial");

    auto* self = app.add_subcommand("selftest", "ring and Demazure invariants");
    add_common(self);
    self->add_option("--max-N", c.max_N, "largest N to test")->check(CLI::Range(2, 64));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }
    try {
        if (verify->parsed()) return cmd_verify(c, out);
        if (opm->parsed()) return cmd_op_matrix(c, out);
        if (bas->parsed()) return cmd_basis(c, out);
        if (pair->parsed()) return cmd_pairing(c, out);
        if (self->parsed()) return cmd_selftest(c, out);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}
