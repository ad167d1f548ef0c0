// Command-line surface: shape construction, operations, Steiner checks,
// nerve enumeration, verification suites, and DOT export. JSON on stdout,
// diagnostics on stderr. Exit codes: 0 pass, 1 fail, 2 inconclusive or
// budget exceeded, 64 unknown subcommand, 65 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "adc/identities.hpp"
#include "adc/io.hpp"
#include "adc/nerve.hpp"
#include "adc/shapes.hpp"
#include "adc/steiner.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace adc;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUnknown = 64;
constexpr int kExitBadInput = 65;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    std::ostringstream out;
    if (path == "-") {
        out << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw BadInput("cannot open '" + path + "'");
        out << in.rdbuf();
    }
    return out.str();
}

BasedADC load_adc(const std::string& path) { return parse_adc(read_input(path)); }

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw BadInput("expected an integer for " + what + ", got '" + s + "'");
    }
}

BasedADC shape_by_spec(const std::string& spec) {
    if (spec == "unit") return unit();
    for (const char* prefix : {"cube", "oriental", "globe"}) {
        std::string p = prefix;
        if (spec.rfind(p, 0) == 0 && spec.size() > p.size()) {
            int n = parse_int(spec.substr(p.size()), "shape size");
            if (p == "cube") return cube(n);
            if (p == "oriental") return oriental(n);
            return globe(n);
        }
    }
    throw BadInput("unknown shape '" + spec + "' (use unit, cubeN, orientalN, globeN)");
}

json report_json(const SuiteReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["params"] = rep.params;
    j["pass"] = rep.pass();
    j["inconclusive"] = rep.inconclusive;
    j["checks"] = json::array();
    for (const auto& c : rep.checks)
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    j["seconds"] = rep.seconds;
    return j;
}

int emit_suite(const SuiteReport& rep) {
    std::cout << report_json(rep).dump(2) << "\n";
    if (rep.inconclusive) return kExitInconclusive;
    return rep.pass() ? kExitPass : kExitFail;
}

int cmd_shape(const std::vector<std::string>& args) {
    if (args.empty()) throw BadInput("shape: missing kind");
    const std::string& kind = args[0];
    BasedADC a;
    if (kind == "theta") {
        if (args.size() != 2) throw BadInput("shape theta: expected one expression");
        a = theta(parse_theta(args[1]));
    } else {
        if (args.size() != 2) throw BadInput("shape: expected `shape <kind> <n>`");
        a = shape_by_spec(kind + args[1]);
    }
    std::cout << serialize_adc(a);
    return kExitPass;
}

int cmd_op(const std::vector<std::string>& args) {
    if (args.empty()) throw BadInput("op: missing operation");
    const std::string& op = args[0];
    if (op == "tensor" || op == "wedge") {
        if (args.size() != 3) throw BadInput("op " + op + ": expected two complexes");
        BasedADC a = load_adc(args[1]), b = load_adc(args[2]);
        std::cout << serialize_adc(op == "tensor" ? tensor(a, b) : wedge(a, b));
        return kExitPass;
    }
    if (op == "suspend") {
        if (args.size() != 2) throw BadInput("op suspend: expected one complex");
        std::cout << serialize_adc(suspend(load_adc(args[1])));
        return kExitPass;
    }
    if (op == "dual") {
        if (args.size() != 4 || args[1] != "--tau")
            throw BadInput("op dual: expected `--tau {odd|even|total|<bitmask>} <complex>`");
        DualitySelector tau = DualitySelector::total();
        const std::string& t = args[2];
        if (t == "odd") {
            tau = DualitySelector::odd();
        } else if (t == "even") {
            tau = DualitySelector::even();
        } else if (t == "total") {
            tau = DualitySelector::total();
        } else {
            std::vector<bool> mask;
            for (char c : t) {
                if (c != '0' && c != '1') throw BadInput("bad duality bitmask '" + t + "'");
                mask.push_back(c == '1');
            }
            tau = DualitySelector::from_mask(mask);
        }
        std::cout << serialize_adc(dual(load_adc(args[3]), tau));
        return kExitPass;
    }
    throw BadInput("op: unknown operation '" + op + "'");
}

int cmd_check(const std::vector<std::string>& args) {
    if (args.size() != 1) throw BadInput("check: expected one complex");
    BasedADC a = load_adc(args[0]);
    json j;
    bool complex_ok = a.validate().ok();
    bool is_unital = unital(a).ok();
    LoopFreeResult lf = strongly_loop_free(a);
    j["complex_ok"] = complex_ok;
    j["unital"] = is_unital;
    j["loop_free"] = lf.loop_free;
    if (!lf.loop_free) {
        json cyc = json::array();
        for (int i : lf.cycle) cyc.push_back(a.basis(i).label);
        j["cycle"] = cyc;
        j["total_order"] = nullptr;
    } else {
        j["total_order"] = is_total_order(a);
    }
    bool strong = complex_ok && is_unital && lf.loop_free;
    j["strong_steiner"] = strong;
    std::cout << j.dump(2) << "\n";
    return strong ? kExitPass : kExitFail;
}

int cmd_nerve(const std::vector<std::string>& args) {
    std::string path;
    int max_dim = 2;
    Coeff cap = 8;
    bool list = false;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--max-dim" && i + 1 < args.size()) {
            max_dim = parse_int(args[++i], "--max-dim");
        } else if (args[i] == "--cap" && i + 1 < args.size()) {
            cap = parse_int(args[++i], "--cap");
        } else if (args[i] == "--list") {
            list = true;
        } else if (path.empty()) {
            path = args[i];
        } else {
            throw BadInput("nerve: unexpected argument '" + args[i] + "'");
        }
    }
    if (path.empty()) throw BadInput("nerve: missing complex");
    BasedADC a = load_adc(path);
    CellEnumeration en = enumerate_cells(a, max_dim, cap);
    json j;
    j["counts"] = en.counts_by_dim(max_dim);
    j["truncated"] = en.truncated;
    if (list) {
        json cells = json::array();
        for (const auto& c : en.cells) cells.push_back(format_cell(a, c));
        j["cells"] = std::move(cells);
    }
    std::cout << j.dump(2) << "\n";
    return en.truncated ? kExitInconclusive : kExitPass;
}

int cmd_verify(const std::vector<std::string>& args, long budget) {
    if (args.empty()) throw BadInput("verify: missing suite name");
    const std::string& suite = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    auto want = [&](size_t n, const std::string& what) {
        if (rest.size() != n) throw BadInput("verify " + suite + ": expected " + what);
    };
    if (suite == "cube-order") {
        want(1, "one size");
        return emit_suite(verify_cube_order(parse_int(rest[0], "n")));
    }
    if (suite == "cube-aut") {
        want(1, "one size");
        return emit_suite(verify_cube_aut_trivial(parse_int(rest[0], "n")));
    }
    if (suite == "cube-aut-control") {
        want(0, "no parameters");
        return emit_suite(verify_cube_aut_control());
    }
    if (suite == "oriental-cube-retract") {
        want(1, "one size");
        return emit_suite(verify_oriental_cube_retract(parse_int(rest[0], "n")));
    }
    if (suite == "wedge-retract") {
        want(2, "two sizes");
        return emit_suite(
            verify_wedge_retract(parse_int(rest[0], "n"), parse_int(rest[1], "m")));
    }
    if (suite == "cone-quotient") {
        want(1, "one size");
        return emit_suite(verify_cone_quotient(parse_int(rest[0], "n")));
    }
    if (suite == "suspension-quotient") {
        want(1, "one size");
        return emit_suite(verify_suspension_quotient(parse_int(rest[0], "n")));
    }
    if (suite == "sigma-pushout") {
        want(1, "one shape");
        return emit_suite(verify_sigma_pushout(share(shape_by_spec(rest[0]))));
    }
    if (suite == "gray-cylinder") {
        want(1, "one shape");
        return emit_suite(verify_gray_cylinder(share(shape_by_spec(rest[0])), budget));
    }
    if (suite == "dual-monoidal") {
        want(2, "two shapes");
        return emit_suite(verify_dual_monoidal(share(shape_by_spec(rest[0])),
                                               share(shape_by_spec(rest[1])), budget));
    }
    if (suite == "nerve-globe") {
        want(1, "one size");
        return emit_suite(verify_nerve_globe(parse_int(rest[0], "q")));
    }
    throw BadInput("verify: unknown suite '" + suite + "'");
}

int cmd_export(const std::vector<std::string>& args) {
    if (args.size() != 2 || args[0] != "dot")
        throw BadInput("export: expected `export dot <complex>`");
    std::cout << export_dot(load_adc(args[1]));
    return kExitPass;
}

int run(std::vector<std::string> args) {
    long budget = kDefaultSearchBudget;
    for (size_t i = 0; i < args.size();) {
        if (args[i] == "--budget" && i + 1 < args.size()) {
            budget = parse_int(args[i + 1], "--budget");
            args.erase(args.begin() + i, args.begin() + i + 2);
        } else {
            ++i;
        }
    }
    if (args.empty()) {
        std::cerr << "usage: adc {shape|op|check|nerve|verify|export} ...\n";
        return kExitUnknown;
    }
    std::string cmd = args[0];
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "shape") return cmd_shape(rest);
    if (cmd == "op") return cmd_op(rest);
    if (cmd == "check") return cmd_check(rest);
    if (cmd == "nerve") return cmd_nerve(rest);
    if (cmd == "verify") return cmd_verify(rest, budget);
    if (cmd == "export") return cmd_export(rest);
    std::cerr << "unknown subcommand '" << cmd << "'\n";
    return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(std::move(args));
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const adc::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
}
