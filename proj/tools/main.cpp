// Command line front end: load ring/code JSON files, run one analysis per
// invocation, print a human summary or a machine report with --json.
//
// Exit codes: 0 ok, 1 bad input, 2 cap exceeded, 3 internal invariant broken.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mixedcode/galois.hpp"
#include "mixedcode/gray.hpp"
#include "mixedcode/json_io.hpp"
#include "mixedcode/support.hpp"

namespace {

using namespace mixedcode;

const char* kCardinalityNote =
    "cardinality exponent uses sum (r-t) k_t + sum (s-t) l_t; the published "
    "formula with (s-t) k_t contradicts its own worked example";
const char* kTernaryDualNote =
    "the published ternary example labels the dual gray distance 4; the "
    "computed duals attain 2 and 3, and 4 belongs to the image of the "
    "misprinted parity-check span";

struct Options {
    std::string verb;
    std::vector<std::string> inputs;
    std::uint32_t h = 0;
    bool json = false;
    bool dual_side = false;
    std::string method = "both";
    std::uint64_t cap = std::uint64_t(1) << 16;
    std::uint64_t seed = 0;
    std::string ring_path;  // ext target ring
};

Json base_report(const Options& opt) {
    Json rep;
    rep["verb"] = opt.verb;
    rep["input"] = opt.inputs.size() == 1 ? Json(opt.inputs[0]) : Json(opt.inputs);
    rep["params"] = {{"h", opt.h}, {"method", opt.method}, {"cap", opt.cap}, {"seed", opt.seed}};
    rep["warnings"] = Json::array();
    return rep;
}

void emit(const Options& opt, const Json& rep, const std::string& human) {
    if (opt.json) {
        std::cout << rep.dump(2) << "\n";
    } else {
        std::cout << human;
        if (!rep["warnings"].empty()) {
            for (const auto& w : rep["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
        }
    }
}

std::string type_string(const CodeType& t) {
    std::string s = "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + ";";
    for (size_t i = 0; i < t.k.size(); ++i) s += (i ? "," : " ") + std::to_string(t.k[i]);
    s += ";";
    for (size_t i = 0; i < t.ell.size(); ++i) s += (i ? "," : " ") + std::to_string(t.ell[i]);
    s += ")";
    return s;
}

Json size_json(const MixedCode& c) {
    Json j;
    j["q"] = c.space().ring().q();
    j["log_q"] = c.log_q_size();
    try {
        j["value"] = c.size(std::uint64_t(1) << 62);
    } catch (const CapExceeded&) {
        // size only as q^log_q when it does not fit a machine word
    }
    return j;
}

int run(const Options& opt) {
    Json rep = base_report(opt);
    const std::string& verb = opt.verb;

    auto load_code = [&](const std::string& path) { return code_from_json(load_json_file(path)); };

    if (verb == "standard-form" || verb == "type") {
        MixedCode c = load_code(opt.inputs.at(0));
        rep["warnings"].push_back(kCardinalityNote);
        rep["result"]["type"] = code_type_to_json(c.type());
        rep["result"]["size"] = size_json(c);
        rep["result"]["weakly_free"] = c.type().weakly_free();
        std::string human = "type " + type_string(c.type()) + "\n|C| = " + std::to_string(c.space().ring().q()) +
                            "^" + std::to_string(c.log_q_size()) + "\n";
        if (verb == "standard-form") {
            const auto& sf = c.standard_form();
            rep["result"]["standard"] = mixed_mat_to_json(sf.standard);
            rep["result"]["perm_x"] = sf.perm_x;
            rep["result"]["perm_y"] = sf.perm_y;
            human += "standard form rows: " + std::to_string(sf.standard.rows()) + "\n";
        }
        emit(opt, rep, human);
        return 0;
    }
    if (verb == "dual" || verb == "hull") {
        MixedCode c = load_code(opt.inputs.at(0));
        MixedCode out = verb == "dual" ? dual(c, opt.h) : hull(c, opt.h);
        rep["warnings"].push_back(kCardinalityNote);
        rep["result"]["code"] = code_to_json(out);
        rep["result"]["type"] = code_type_to_json(out.type());
        rep["result"]["size"] = size_json(out);
        emit(opt, rep, verb + " type " + type_string(out.type()) + "\n");
        return 0;
    }
    if (verb == "lcd") {
        MixedCode c = load_code(opt.inputs.at(0));
        LcdMethod method = opt.method == "oracle"       ? LcdMethod::Oracle
                           : opt.method == "structural" ? LcdMethod::Structural
                                                        : LcdMethod::Both;
        LcdReport lr = is_lcd(c, opt.h, method);
        rep["result"]["lcd"] = lr.lcd;
        rep["result"]["weakly_free"] = lr.weakly_free;
        if (lr.oracle) rep["result"]["hull_trivial"] = *lr.oracle;
        if (lr.structural) rep["result"]["structural"] = *lr.structural;
        rep["result"]["hypothesis_holds"] = lr.hypothesis_holds;
        if (lr.fell_back_to_oracle) {
            rep["result"]["fell_back_to_oracle"] = true;
            rep["warnings"].push_back("structural hypothesis failed; verdict from the hull computation");
        }
        if (lr.witness) rep["result"]["witness"] = ring_mat_to_json(*lr.witness);
        std::string human = std::string("lcd: ") + (lr.lcd ? "yes" : "no");
        if (lr.oracle && lr.structural) human += " (hull and structural criteria agree)";
        emit(opt, rep, human + "\n");
        return 0;
    }
    if (verb == "invariant" || verb == "core" || verb == "res" || verb == "trace") {
        MixedCode c = load_code(opt.inputs.at(0));
        GaloisContext ctx(c.space());
        if (verb == "invariant") {
            bool inv = ctx.is_invariant(c);
            rep["result"]["invariant"] = inv;
            auto mat = ctx.subring_generator_matrix(c);
            if (mat) rep["result"]["subring_generators"] = mixed_mat_to_json(*mat);
            emit(opt, rep, std::string("invariant: ") + (inv ? "yes" : "no") + "\n");
            return 0;
        }
        MixedCode out = verb == "core"  ? ctx.g_core(c)
                        : verb == "res" ? ctx.res_subcode(c)
                                        : ctx.trace_code(c);
        rep["result"]["code"] = code_to_json(out);
        rep["result"]["type"] = code_type_to_json(out.type());
        emit(opt, rep, verb + " type " + type_string(out.type()) + "\n");
        return 0;
    }
    if (verb == "ext") {
        MixedCode d = load_code(opt.inputs.at(0));
        if (opt.ring_path.empty()) throw std::invalid_argument("ext requires --ring with the target ring spec");
        auto ring = Ring::make(ring_spec_from_json(load_json_file(opt.ring_path)));
        MixedSpace target(ring, d.space().r(), d.space().alpha(), d.space().beta());
        GaloisContext ctx(target);
        if (!ctx.subspace().same(d.space()))
            throw std::invalid_argument("ext: input code does not live over the subring pair of --ring");
        MixedCode out = ctx.ext_code(MixedCode(ctx.subspace(), d.generators()));
        rep["result"]["code"] = code_to_json(out);
        rep["result"]["type"] = code_type_to_json(out.type());
        emit(opt, rep, "ext type " + type_string(out.type()) + "\n");
        return 0;
    }
    if (verb == "delsarte") {
        MixedCode c = load_code(opt.inputs.at(0));
        GaloisContext ctx(c.space());
        bool ok = ctx.delsarte_check(c, opt.h);
        MixedCode lhs = ctx.trace_code(dual(c, opt.h));
        MixedCode rhs = dual(ctx.res_subcode(c), 0);
        rep["result"]["equal"] = ok;
        rep["result"]["trace_of_dual_type"] = code_type_to_json(lhs.type());
        rep["result"]["dual_of_res_type"] = code_type_to_json(rhs.type());
        emit(opt, rep, std::string("trace(dual) == dual0(res): ") + (ok ? "yes" : "no") + "\n");
        return 0;
    }
    if (verb == "gray") {
        MixedCode c = load_code(opt.inputs.at(0));
        GrayImage img = gray_image(c, opt.cap);
        rep["result"] = gray_image_to_json(c.space(), img);
        std::string human = std::string("gray image: ") + (img.linear ? "linear" : "nonlinear") + ", " +
                            std::to_string(img.words.size()) + " words of length " +
                            std::to_string(gray_length(c.space())) + "\n";
        emit(opt, rep, human);
        return 0;
    }
    if (verb == "weight") {
        auto ring = Ring::make(ring_spec_from_json(load_json_file(opt.inputs.at(0))));
        Json table = Json::array();
        std::string human;
        if (ring->size() > (1u << 12)) throw CapExceeded("weight table limited to rings of size <= 2^12");
        for (std::uint32_t v = 0; v < ring->size(); ++v) {
            Json entry;
            entry["element"] = relem_to_json(*ring, v);
            entry["weight"] = hom_weight_elem(*ring, v);
            table.push_back(entry);
            human += std::to_string(hom_weight_elem(*ring, v)) + (v + 1 < ring->size() ? " " : "\n");
        }
        rep["result"]["weights"] = table;
        emit(opt, rep, human);
        return 0;
    }
    if (verb == "distance") {
        Json j = load_json_file(opt.inputs.at(0));
        // accept a bare field code, a gray result, or a full report
        if (j.contains("result")) j = j["result"];
        if (j.contains("code")) j = j["code"];
        FieldCode c = field_code_from_json(j);
        FieldCode target = opt.dual_side ? field_dual(c, 0) : c;
        std::uint64_t d = min_distance(target, opt.cap << 4);
        rep["result"]["min_distance"] = d;
        rep["result"]["dim"] = target.dim();
        emit(opt, rep, "min distance = " + std::to_string(d) + "\n");
        return 0;
    }
    if (verb == "transfer") {
        MixedCode c = load_code(opt.inputs.at(0));
        TransferReport tr = lcd_transfer(c, opt.cap);
        if (tr.q == 3) rep["warnings"].push_back(kTernaryDualNote);
        rep["result"]["q"] = tr.q;
        rep["result"]["obstruction_zero"] = tr.obstruction_zero;
        rep["result"]["source_lcd"] = tr.source_lcd;
        rep["result"]["reencoded_linear"] = tr.reencoded_linear;
        if (tr.reencoded_lcd) rep["result"]["reencoded_lcd"] = *tr.reencoded_lcd;
        if (tr.gray_linear) rep["result"]["gray_linear"] = *tr.gray_linear;
        if (tr.binary_lcd) rep["result"]["binary_lcd"] = *tr.binary_lcd;
        if (tr.gray_code) rep["result"]["gray_code"] = field_code_to_json(*tr.gray_code);
        if (tr.puncture_lcd) rep["result"]["ternary_puncture_lcd"] = *tr.puncture_lcd;
        rep["result"]["dual_reencode_match"] = tr.dual_reencode_match;
        if (tr.gray_dual_match) rep["result"]["gray_dual_match"] = *tr.gray_dual_match;
        if (tr.reencode_biconditional) rep["result"]["reencode_biconditional"] = *tr.reencode_biconditional;
        if (tr.gray_biconditional) rep["result"]["gray_biconditional"] = *tr.gray_biconditional;
        if (tr.puncture_biconditional) {
            rep["result"]["puncture_biconditional"] = *tr.puncture_biconditional;
            if (!*tr.puncture_biconditional)
                rep["warnings"].push_back(
                    "the ternary puncture equivalence fails here: the hull lies inside the socle of "
                    "the y block, which the puncture cannot see");
        }
        rep["result"]["verdicts_consistent"] = tr.verdicts_consistent;
        std::string human = std::string("source lcd: ") + (tr.source_lcd ? "yes" : "no") +
                            ", transfer consistent: " + (tr.verdicts_consistent ? "yes" : "no") + "\n";
        emit(opt, rep, human);
        return 0;
    }
    throw std::invalid_argument("unknown verb: " + verb);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of linear codes over mixed chain ring alphabets"};
    app.set_help_flag("--help", "print this help message");
    Options opt;
    app.add_option("verb", opt.verb,
                   "standard-form | type | dual | hull | lcd | invariant | core | res | trace | ext | "
                   "delsarte | gray | weight | distance | transfer")
        ->required();
    app.add_option("inputs", opt.inputs, "input JSON file(s)")->expected(-1);
    app.add_option("--h", opt.h, "twist exponent (default 0)");
    app.add_flag("--json", opt.json, "emit a machine-readable report");
    app.add_flag("--dual", opt.dual_side, "operate on the dual (distance verb)");
    app.add_option("--method", opt.method, "lcd method: oracle | structural | both")
        ->check(CLI::IsMember({"oracle", "structural", "both"}));
    app.add_option("--alpha-cap", opt.cap, "enumeration cap (default 65536)");
    app.add_option("--seed", opt.seed, "seed echoed into reports");
    app.add_option("--ring", opt.ring_path, "target ring spec (ext verb)");
    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.inputs.empty()) throw std::invalid_argument("missing input file");
        return run(opt);
    } catch (const mixedcode::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
