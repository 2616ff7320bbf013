#include "trigsurf/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace trigsurf::io {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json freq_set_to_node(const FrequencySet& fs) {
    json node;
    node["dim"] = fs.dim();
    node["indices"] = fs.indices();
    return node;
}

FrequencySet freq_set_from_node(const json& node) {
    const int dim = node.at("dim").get<int>();
    auto indices = node.at("indices").get<std::vector<FreqIndex>>();
    return FrequencySet(dim, std::move(indices));
}

json complex_vector_to_node(const Eigen::VectorXcd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back({v[i].real(), v[i].imag()});
    }
    return arr;
}

Eigen::VectorXcd complex_vector_from_node(const json& arr, const char* field) {
    if (!arr.is_array()) {
        throw ParseError(std::string(field) + ": expected an array of [re, im] pairs");
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& entry = arr[i];
        if (!entry.is_array() || entry.size() != 2) {
            throw ParseError(std::string(field) + "[" + std::to_string(i) +
                             "]: expected an [re, im] pair");
        }
        v[static_cast<Eigen::Index>(i)] =
            Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return v;
}

json poly_to_node(const TrigPolynomial& p, std::optional<std::uint64_t> seed) {
    json node;
    node["support"] = freq_set_to_node(p.support());
    node["coeffs"] = complex_vector_to_node(p.coeffs());
    node["real_valued"] = p.real_valued();
    if (seed) node["seed"] = *seed;
    return node;
}

TrigPolynomial poly_from_node(const json& node) {
    FrequencySet support = freq_set_from_node(node.at("support"));
    Eigen::VectorXcd coeffs = complex_vector_from_node(node.at("coeffs"), "coeffs");
    const bool real_valued = node.at("real_valued").get<bool>();
    return TrigPolynomial(std::move(support), std::move(coeffs), real_valued);
}

json parse_or_rethrow(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string to_json(const FrequencySet& fs) { return freq_set_to_node(fs).dump(2); }

FrequencySet frequency_set_from_json(const std::string& text) {
    try {
        return freq_set_from_node(parse_or_rethrow(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("frequency set: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("frequency set: ") + e.what());
    }
}

std::string to_json(const TrigPolynomial& p, std::optional<std::uint64_t> seed) {
    return poly_to_node(p, seed).dump(2);
}

TrigPolynomial polynomial_from_json(const std::string& text) {
    try {
        return poly_from_node(parse_or_rethrow(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("polynomial: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("polynomial: ") + e.what());
    }
}

std::string to_json(const RecoveryResult& r, std::optional<double> match) {
    json node;
    node["coefficients"] = poly_to_node(r.coefficients, std::nullopt);
    node["singular_values"] =
        std::vector<double>(r.singular_values.data(),
                            r.singular_values.data() + r.singular_values.size());
    node["null_space_dim"] = r.null_space_dim;
    node["unique"] = r.unique;
    if (match) node["match"] = *match;
    return node.dump(2);
}

std::string to_json(const Interpolant& itp) {
    json node;
    node["gamma"] = freq_set_to_node(itp.gamma());
    json anchors = json::array();
    for (const auto& a : itp.anchors().points()) {
        anchors.push_back(std::vector<double>(a.data(), a.data() + a.size()));
    }
    node["anchors"] = anchors;
    node["weights"] = complex_vector_to_node(itp.weights());
    node["pinv_tol"] = itp.pinv_tol();
    return node.dump(2);
}

Interpolant interpolant_from_json(const std::string& text) {
    try {
        const json node = parse_or_rethrow(text);
        FrequencySet gamma = freq_set_from_node(node.at("gamma"));
        SampleSet anchors(gamma.dim());
        for (const auto& entry : node.at("anchors")) {
            const auto coords = entry.get<std::vector<double>>();
            Point x(static_cast<Eigen::Index>(coords.size()));
            for (std::size_t i = 0; i < coords.size(); ++i)
                x[static_cast<Eigen::Index>(i)] = coords[i];
            anchors.add(x, 0, 0.0);
        }
        Eigen::VectorXcd weights = complex_vector_from_node(node.at("weights"), "weights");
        const double pinv_tol = node.at("pinv_tol").get<double>();
        return Interpolant(std::move(anchors), std::move(weights), std::move(gamma), pinv_tol);
    } catch (const json::exception& e) {
        throw ParseError(std::string("interpolant: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("interpolant: ") + e.what());
    }
}

std::string to_csv(const SampleSet& s) {
    std::ostringstream out;
    for (int d = 0; d < s.dim(); ++d) {
        out << "x" << (d + 1) << ",";
    }
    out << "component,residual\n";
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point& x = s.point(i);
        for (Eigen::Index d = 0; d < x.size(); ++d) {
            out << format_double(x[d]) << ",";
        }
        out << s.component(i) << "," << format_double(s.residual(i)) << "\n";
    }
    return out.str();
}

SampleSet sample_set_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("sample CSV: empty input");
    }

    // Header: x1,...,xn,component,residual
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string field;
        while (std::getline(hs, field, ',')) header.push_back(field);
    }
    if (header.size() < 3 || header[header.size() - 2] != "component" ||
        header.back() != "residual") {
        throw ParseError("sample CSV line 1: expected header x1,...,xn,component,residual");
    }
    const int dim = static_cast<int>(header.size()) - 2;
    for (int d = 0; d < dim; ++d) {
        if (header[static_cast<std::size_t>(d)] != "x" + std::to_string(d + 1)) {
            throw ParseError("sample CSV line 1: coordinate column " + std::to_string(d + 1) +
                             " must be named x" + std::to_string(d + 1));
        }
    }

    SampleSet out(dim);
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (static_cast<int>(fields.size()) != dim + 2) {
            throw ParseError("sample CSV line " + std::to_string(line_no) + ": expected " +
                             std::to_string(dim + 2) + " fields, got " +
                             std::to_string(fields.size()));
        }
        try {
            Point x(dim);
            for (int d = 0; d < dim; ++d) x[d] = std::stod(fields[static_cast<std::size_t>(d)]);
            const int component = std::stoi(fields[static_cast<std::size_t>(dim)]);
            const double residual = std::stod(fields[static_cast<std::size_t>(dim) + 1]);
            out.add(x, component, residual);
        } catch (const std::invalid_argument& e) {
            throw ParseError("sample CSV line " + std::to_string(line_no) + ": " + e.what());
        } catch (const std::out_of_range&) {
            throw ParseError("sample CSV line " + std::to_string(line_no) +
                             ": numeric field out of range");
        }
    }
    if (out.empty()) {
        throw ParseError("sample CSV: no data rows");
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

}  // namespace trigsurf::io
