#include "aitchison/state_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aitchison {

DensityState StateFile::to_state(double eps_pd) const {
    if (kind != Kind::State) {
        throw NotUnitTrace("StateFile: kind is not \"state\"");
    }
    return DensityState(HermitianMatrix(matrix), eps_pd);
}

Hamiltonian StateFile::to_hamiltonian() const {
    if (kind != Kind::Hamiltonian) {
        throw NotHermitian("StateFile: kind is not \"hamiltonian\"");
    }
    return Hamiltonian(HermitianMatrix(matrix));
}

StateFile StateFile::from_state(const DensityState& d) {
    StateFile f;
    f.kind = Kind::State;
    f.dim = d.dim();
    f.matrix = d.matrix().matrix();
    return f;
}

StateFile StateFile::from_hamiltonian(const Hamiltonian& h) {
    StateFile f;
    f.kind = Kind::Hamiltonian;
    f.dim = h.dim();
    f.matrix = h.matrix().matrix();
    return f;
}

std::string format_double_17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

} // namespace

std::string serialize_state_file(const StateFile& f) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"kind\": \"" << (f.kind == StateFile::Kind::State ? "state" : "hamiltonian")
        << "\",\n";
    out << "  \"dim\": " << f.dim << ",\n";
    out << "  \"matrix\": [\n";
    for (int i = 0; i < f.dim; ++i) {
        out << "    [";
        for (int j = 0; j < f.dim; ++j) {
            const Complex z = f.matrix(i, j);
            out << "[" << format_double_17(z.real()) << ", " << format_double_17(z.imag())
                << "]";
            if (j + 1 < f.dim) out << ", ";
        }
        out << "]";
        if (i + 1 < f.dim) out << ",";
        out << "\n";
    }
    out << "  ]";
    if (!f.metadata.empty()) {
        out << ",\n  \"metadata\": {";
        bool first = true;
        for (const auto& [key, value] : f.metadata) {
            if (!first) out << ", ";
            first = false;
            out << "\"" << escape_json(key) << "\": \"" << escape_json(value) << "\"";
        }
        out << "}";
    }
    out << "\n}\n";
    return out.str();
}

void write_state_file(const StateFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileFormatError("cannot open for writing: " + path);
    out << serialize_state_file(f);
    if (!out) throw FileFormatError("write failed: " + path);
}

StateFile parse_state_file(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FileFormatError(std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object()) throw FileFormatError("top level is not an object");

    StateFile f;
    if (!j.contains("kind") || !j["kind"].is_string()) {
        throw FileFormatError("missing string field \"kind\"");
    }
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "state") {
        f.kind = StateFile::Kind::State;
    } else if (kind == "hamiltonian") {
        f.kind = StateFile::Kind::Hamiltonian;
    } else {
        throw FileFormatError("unknown kind \"" + kind + "\"");
    }

    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw FileFormatError("missing integer field \"dim\"");
    }
    f.dim = j["dim"].get<int>();
    if (f.dim < 2 || f.dim > 4096) throw FileFormatError("dim out of range");

    if (!j.contains("matrix") || !j["matrix"].is_array() ||
        j["matrix"].size() != static_cast<std::size_t>(f.dim)) {
        throw FileFormatError("\"matrix\" must be an array of dim rows");
    }
    f.matrix = ComplexMatrix(f.dim, f.dim);
    for (int i = 0; i < f.dim; ++i) {
        const auto& row = j["matrix"][static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(f.dim)) {
            throw FileFormatError("matrix row " + std::to_string(i) + " has wrong length");
        }
        for (int jj = 0; jj < f.dim; ++jj) {
            const auto& cell = row[static_cast<std::size_t>(jj)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                throw FileFormatError("matrix entry (" + std::to_string(i) + "," +
                                      std::to_string(jj) + ") is not [re, im]");
            }
            f.matrix(i, jj) = Complex{cell[0].get<double>(), cell[1].get<double>()};
        }
    }
    if (!f.matrix.all_finite()) throw FileFormatError("matrix has non-finite entries");

    if (j.contains("metadata")) {
        if (!j["metadata"].is_object()) throw FileFormatError("\"metadata\" must be an object");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string()) throw FileFormatError("metadata values must be strings");
            f.metadata[key] = value.get<std::string>();
        }
    }
    return f;
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError("cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_file(buf.str());
}

} // namespace aitchison
