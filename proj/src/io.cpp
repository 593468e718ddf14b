#include "diskinspect/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace diskinspect {

using nlohmann::json;

std::string spec_to_json(const TrajectorySpec& spec) {
    json j;
    j["c"] = spec.c;
    j["k"] = spec.k;
    j["theta"] = spec.theta;
    j["t"] = spec.t;
    return j.dump(2);
}

TrajectorySpec spec_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    TrajectorySpec spec;
    spec.c = j.at("c").get<double>();
    spec.k = j.at("k").get<int>();
    spec.theta = j.at("theta").get<double>();
    spec.t = j.at("t").get<std::vector<double>>();
    spec.validate();
    return spec;
}

std::string polyline_to_json(const Polyline& path) {
    json verts = json::array();
    for (const Point& v : path.vertices) verts.push_back({v.x, v.y});
    json j;
    j["vertices"] = verts;
    return j.dump(2);
}

bool json_is_polyline(const std::string& json_text) {
    const json j = json::parse(json_text);
    return j.contains("vertices");
}

Polyline polyline_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    std::vector<Point> pts;
    for (const auto& v : j.at("vertices")) pts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    return make_polyline(std::move(pts));
}

std::string report_to_json(const SolveReport& report) {
    json j;
    j["theta"] = report.theta;
    j["t"] = report.t;
    j["objective"] = report.objective;
    j["worst"] = report.worst;
    j["avg"] = report.avg;
    j["kkt_residual"] = report.kkt_residual;
    j["iterations"] = report.iterations;
    j["converged"] = report.converged;
    return j.dump(2);
}

namespace {
std::ostringstream csv_stream() {
    std::ostringstream os;
    os << std::setprecision(17);
    return os;
}
}  // namespace

std::string polyline_csv(const Polyline& path) {
    auto os = csv_stream();
    os << "x,y,cumlen\n";
    for (std::size_t i = 0; i < path.vertices.size(); ++i)
        os << path.vertices[i].x << ',' << path.vertices[i].y << ',' << path.cumlen[i] << '\n';
    return os.str();
}

std::string profile_csv(const InspectionProfile& prof) {
    auto os = csv_stream();
    os << "phi,time\n";
    for (std::size_t i = 0; i < prof.phis.size(); ++i)
        os << prof.phis[i] << ',' << prof.times[i] << '\n';
    return os.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& grid_name) {
    auto os = csv_stream();
    os << grid_name << ",objective,worst,avg,theta,kkt_residual,converged,regime\n";
    for (const SweepRow& r : rows)
        os << r.grid << ',' << r.objective << ',' << r.worst << ',' << r.avg << ',' << r.theta
           << ',' << r.kkt_residual << ',' << (r.converged ? 1 : 0) << ',' << r.regime << '\n';
    return os.str();
}

std::string polyline_svg(const Polyline& path, double c) {
    // 100 units per disk radius, y flipped into screen coordinates.
    const double s = 100.0;
    double max_r = 1.0;
    for (const Point& v : path.vertices) max_r = std::max(max_r, std::max(std::abs(v.x), std::abs(v.y)));
    const double half = s * (max_r + 0.2);

    std::ostringstream os;
    os << std::setprecision(10);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -half << ' ' << -half << ' '
       << 2 * half << ' ' << 2 * half << "\">\n";
    os << "  <circle cx=\"0\" cy=\"0\" r=\"" << s
       << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    // inspected arc [0, c], counterclockwise in math coordinates
    if (c > 0.0) {
        const double x1 = s, y1 = 0.0;
        const double x2 = s * std::cos(c), y2 = -s * std::sin(c);
        if (c >= kTwoPi - 1e-12) {
            os << "  <circle cx=\"0\" cy=\"0\" r=\"" << s
               << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
        } else {
            const int large = c > kPi ? 1 : 0;
            os << "  <path d=\"M " << x1 << ' ' << y1 << " A " << s << ' ' << s << " 0 " << large
               << " 0 " << x2 << ' ' << y2
               << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\"/>\n";
        }
    }

    os << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
        if (i) os << ' ';
        os << s * path.vertices[i].x << ',' << -s * path.vertices[i].y;
    }
    os << "\"/>\n</svg>\n";
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace diskinspect
