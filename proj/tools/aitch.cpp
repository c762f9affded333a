// aitch — file-based CLI over the state-space geometry library.
//
// Commands operate on JSON state/hamiltonian files (see state_file.hpp).
// Exit codes: 0 success, 1 domain violation, 2 I/O or parse failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aitchison/basis.hpp"
#include "aitchison/modular.hpp"
#include "aitchison/qubit.hpp"
#include "aitchison/state_file.hpp"
#include "aitchison/state_space.hpp"

namespace {

using namespace aitchison;

std::string format_scalar(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw FileFormatError("cannot open for writing: " + out_path);
    out << text;
    if (!out) throw FileFormatError("write failed: " + out_path);
}

void emit_state(const DensityState& d, const std::string& out_path) {
    emit(serialize_state_file(StateFile::from_state(d)), out_path);
}

void emit_hamiltonian(const Hamiltonian& h, const std::string& out_path) {
    emit(serialize_state_file(StateFile::from_hamiltonian(h)), out_path);
}

int g_expect_dim = 0;  // 0 = no constraint

StateFile load_file(const std::string& path) {
    StateFile f = read_state_file(path);
    if (g_expect_dim > 0 && f.dim != g_expect_dim) {
        throw WrongDimension("input " + path + " has dim " + std::to_string(f.dim) +
                             ", expected " + std::to_string(g_expect_dim));
    }
    return f;
}

DensityState load_state(const std::string& path, double eps) {
    return load_file(path).to_state(eps);
}

int run_validate(const std::string& path, double eps) {
    const StateFile f = load_file(path);

    double herm_residual = 0.0;
    for (int i = 0; i < f.dim; ++i)
        for (int j = i; j < f.dim; ++j)
            herm_residual = std::max(herm_residual,
                                     std::abs(f.matrix(i, j) - std::conj(f.matrix(j, i))));

    const HermitianMatrix sym = HermitianMatrix::symmetrized(f.matrix);
    const double trace = sym.trace();
    const double min_eig = hermitian_eig(sym).eigenvalues.front();

    const bool is_state = f.kind == StateFile::Kind::State;
    std::cout << "kind=" << (is_state ? "state" : "hamiltonian") << "\n";
    std::cout << "herm_residual=" << format_scalar(herm_residual) << "\n";
    std::cout << "trace=" << format_scalar(trace) << "\n";
    if (is_state) std::cout << "trace_dev=" << format_scalar(std::abs(trace - 1.0)) << "\n";
    std::cout << "min_eig=" << format_scalar(min_eig) << "\n";

    std::vector<std::string> violations;
    if (herm_residual > kHermTol) violations.push_back("hermiticity residual exceeds 1e-10");
    if (is_state) {
        if (std::abs(trace - 1.0) > 1e-10) violations.push_back("trace deviates from 1");
        if (min_eig <= eps) violations.push_back("not positive definite at eps_pd");
    }
    if (violations.empty()) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid:";
    for (const auto& v : violations) std::cout << " " << v << ";";
    std::cout << "\n";
    return 1;
}

std::string arc_csv(const DensityState& a, const DensityState& b, int steps) {
    if (steps < 2) throw std::invalid_argument("arc: steps must be >= 2");
    std::string csv;
    const bool use_bloch = a.dim() == 2;
    if (use_bloch) {
        csv = "t,x,y,z\n";
    } else {
        csv = "t";
        for (const BasisLabel& label : basis_labels(a.dim())) csv += "," + label.to_string();
        csv += "\n";
    }
    for (int i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) / (steps - 1);
        const DensityState point = arc(a, b, t);
        csv += format_double_17(t);
        if (use_bloch) {
            const BlochVector v = state_to_bloch(point);
            csv += "," + format_double_17(v.x) + "," + format_double_17(v.y) + "," +
                   format_double_17(v.z);
        } else {
            for (double c : coordinates(point).coords) csv += "," + format_double_17(c);
        }
        csv += "\n";
    }
    return csv;
}

int run_basis(int n, const std::string& out_dir) {
    if (n < 2 || n > 16) throw std::invalid_argument("basis: n must be in [2, 16]");
    std::filesystem::create_directories(out_dir);

    const auto labels = basis_labels(n);
    std::vector<DensityState> states;
    states.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        states.push_back(basis_state(labels[i], n));
        write_state_file(StateFile::from_state(states.back()),
                         out_dir + "/" + labels[i].to_string() + ".json");
    }

    double max_offdiag = 0.0, max_diag_dev = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
        for (std::size_t j = i; j < states.size(); ++j) {
            const double g = inner(states[i], states[j]);
            if (i == j) {
                max_diag_dev = std::max(max_diag_dev, std::abs(g - 1.0));
            } else {
                max_offdiag = std::max(max_offdiag, std::abs(g));
            }
        }

    std::string report;
    report += "n=" + std::to_string(n) + "\n";
    report += "elements=" + std::to_string(labels.size()) + "\n";
    report += "max_abs_offdiag=" + format_scalar(max_offdiag) + "\n";
    report += "max_abs_diag_dev=" + format_scalar(max_diag_dev) + "\n";
    const bool pass = max_offdiag <= 1e-9 && max_diag_dev <= 1e-9;
    report += pass ? "PASS\n" : "FAIL\n";
    emit(report, out_dir + "/gram_report.txt");
    std::cout << report;
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aitchison geometry on density matrices: perturbation, powering,\n"
                 "log-ratio transforms, Gibbs states, arcs, bases and Bloch coordinates."};
    app.require_subcommand(1);

    double eps = kEpsPd;
    std::uint64_t seed = 0;
    int expect_dim = 0;
    app.add_option("--eps", eps, "minimum eigenvalue admitted when validating inputs")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized subcommands (reserved)");
    app.add_option("--dim", expect_dim, "require every input file to have this dimension");

    std::string path_a, path_b, out_path, out_dir;
    double lambda = 1.0, beta = 1.0;
    int steps = 2, basis_n = 2;

    auto* c_validate = app.add_subcommand("validate", "check a file against its invariants");
    c_validate->add_option("input", path_a)->required();

    auto add_binary = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        cmd->add_option("inputA", path_a)->required();
        cmd->add_option("inputB", path_b)->required();
        return cmd;
    };
    auto* c_add = add_binary("add", "perturbation A (+) B");
    c_add->add_option("-o,--out", out_path);
    auto* c_sub = add_binary("sub", "difference A (-) B");
    c_sub->add_option("-o,--out", out_path);
    auto* c_inner_cmd = add_binary("inner", "inner product of two states");
    auto* c_dist = add_binary("dist", "distance between two states");
    auto* c_entropy = add_binary("entropy", "relative entropy S(A, B) in nats");
    auto* c_tensor = add_binary("tensor", "tensor product of two states");
    c_tensor->add_option("-o,--out", out_path);

    auto* c_pow = app.add_subcommand("pow", "powering lambda (.) A");
    c_pow->add_option("lambda", lambda)->required();
    c_pow->add_option("input", path_a)->required();
    c_pow->add_option("-o,--out", out_path);

    auto* c_neg =
        app.add_subcommand("neg", "additive inverse of a state, or -H for a Hamiltonian");
    c_neg->add_option("input", path_a)->required();
    c_neg->add_option("-o,--out", out_path);

    auto* c_clr =
        app.add_subcommand("clr", "centered log-ratio transform (state -> Hamiltonian)");
    c_clr->add_option("input", path_a)->required();
    c_clr->add_option("-o,--out", out_path);

    auto* c_gibbs = app.add_subcommand("gibbs", "Gibbs state of a Hamiltonian file");
    c_gibbs->add_option("input", path_a)->required();
    c_gibbs->add_option("--beta", beta, "inverse temperature (> 0)")->capture_default_str();
    c_gibbs->add_option("-o,--out", out_path);

    auto* c_bloch = app.add_subcommand("bloch", "Bloch coordinates of a dim-2 state");
    c_bloch->add_option("input", path_a)->required();

    auto* c_coords = app.add_subcommand("coords", "basis coordinates of a state");
    c_coords->add_option("input", path_a)->required();

    auto* c_norm = app.add_subcommand("norm", "norm of a state");
    c_norm->add_option("input", path_a)->required();

    auto* c_arc = app.add_subcommand("arc", "sample the arc from B (t=0) to A (t=1) as CSV");
    c_arc->add_option("inputA", path_a)->required();
    c_arc->add_option("inputB", path_b)->required();
    c_arc->add_option("--steps", steps, "number of samples (>= 2)")->capture_default_str();
    c_arc->add_option("-o,--out", out_path);

    auto* c_basis =
        app.add_subcommand("basis", "write the n^2-1 basis states and a Gram report");
    c_basis->add_option("n", basis_n)->required();
    c_basis->add_option("out_dir", out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    g_expect_dim = expect_dim;

    try {
        if (*c_validate) return run_validate(path_a, eps);

        if (*c_add) {
            emit_state(perturb(load_state(path_a, eps), load_state(path_b, eps)), out_path);
        } else if (*c_sub) {
            emit_state(subtract(load_state(path_a, eps), load_state(path_b, eps)), out_path);
        } else if (*c_inner_cmd) {
            std::cout << format_scalar(inner(load_state(path_a, eps), load_state(path_b, eps)))
                      << "\n";
        } else if (*c_dist) {
            std::cout << format_scalar(
                             distance(load_state(path_a, eps), load_state(path_b, eps)))
                      << "\n";
        } else if (*c_entropy) {
            std::cout << format_scalar(relative_entropy(load_state(path_a, eps),
                                                        load_state(path_b, eps)))
                      << "\n";
        } else if (*c_tensor) {
            emit_state(tensor(load_state(path_a, eps), load_state(path_b, eps)), out_path);
        } else if (*c_pow) {
            emit_state(power(lambda, load_state(path_a, eps)), out_path);
        } else if (*c_neg) {
            const StateFile f = load_file(path_a);
            if (f.kind == StateFile::Kind::State) {
                emit_state(negate(f.to_state(eps)), out_path);
            } else {
                emit_hamiltonian(Hamiltonian((-1.0) * f.to_hamiltonian().matrix()), out_path);
            }
        } else if (*c_clr) {
            emit_hamiltonian(clr(load_state(path_a, eps)), out_path);
        } else if (*c_gibbs) {
            emit_state(
                gibbs(load_file(path_a).to_hamiltonian(), InverseTemperature(beta)),
                out_path);
        } else if (*c_bloch) {
            const BlochVector v = state_to_bloch(load_state(path_a, eps));
            std::cout << format_scalar(v.x) << " " << format_scalar(v.y) << " "
                      << format_scalar(v.z) << "\n";
        } else if (*c_coords) {
            const DensityState d = load_state(path_a, eps);
            const CoordinateVector c = coordinates(d);
            const auto labels = basis_labels(d.dim());
            for (std::size_t i = 0; i < labels.size(); ++i)
                std::cout << labels[i].to_string() << " " << format_scalar(c.coords[i]) << "\n";
        } else if (*c_norm) {
            std::cout << format_scalar(norm(load_state(path_a, eps))) << "\n";
        } else if (*c_arc) {
            emit(arc_csv(load_state(path_a, eps), load_state(path_b, eps), steps), out_path);
        } else if (*c_basis) {
            return run_basis(basis_n, out_dir);
        }
        return 0;
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
