#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>
#include <utility>

#include "proxheat/scenario.hpp"

namespace proxheat {

namespace {

std::string fmt_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v); // 9 significant digits
    return buf;
}

struct AxisInfo {
    std::string label;  // axis caption with display unit
    double scale;       // SI value -> display value
};

AxisInfo axis_info(const std::string& sweep_label) {
    if (sweep_label == "z_m") return {"z [um]", 1e6};
    if (sweep_label == "omega_t_rad_s") return {"omega_t [rad/s]", 1.0};
    if (sweep_label == "T_K") return {"T [K]", 1.0};
    return {sweep_label, 1.0};
}

const char* sweep_unit(const std::string& label) {
    if (label == "z_m") return "m";
    if (label == "omega_t_rad_s") return "rad/s";
    if (label == "T_K") return "K";
    return "SI";
}

} // namespace

void emit_csv(const SweepTable& table, std::ostream& out) {
    out << "# proxheat sweep; SI units: " << table.sweep_label << " in "
        << sweep_unit(table.sweep_label)
        << ", rates in 1/s; empty cell = channel not applicable\n";
    out << table.sweep_label;
    for (const auto& col : table.columns) out << "," << col.label;
    out << ",warnings\n";
    for (size_t row = 0; row < table.sweep_values.size(); ++row) {
        out << fmt_cell(table.sweep_values[row]);
        for (const auto& col : table.columns) {
            out << ",";
            if (col.values[row]) out << fmt_cell(*col.values[row]);
        }
        out << "," << (row < table.row_warnings.size() ? table.row_warnings[row] : "") << "\n";
    }
}

std::string csv_string(const SweepTable& table) {
    std::ostringstream os;
    emit_csv(table, os);
    return os.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(std::exchange(cur, {}));
        } else {
            cur += ch;
        }
    }
    cells.push_back(cur);
    return cells;
}

} // namespace

SweepTable parse_csv(std::istream& in) {
    SweepTable table;
    std::string line;
    bool header_done = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (!header_done) {
            if (cells.size() < 2 || cells.back() != "warnings")
                throw ConfigError("csv:" + std::to_string(lineno) +
                                  ": expected header '<sweep>,<columns...>,warnings'");
            table.sweep_label = cells.front();
            for (size_t i = 1; i + 1 < cells.size(); ++i) {
                SweepColumn col;
                col.label = cells[i];
                const auto sep = col.label.find(':');
                const std::string mech_name =
                    sep == std::string::npos ? col.label : col.label.substr(0, sep);
                col.mechanism = mechanism_from_string(mech_name);
                if (sep != std::string::npos) col.material_name = col.label.substr(sep + 1);
                table.columns.push_back(std::move(col));
            }
            header_done = true;
            continue;
        }
        if (cells.size() != table.columns.size() + 2)
            throw ConfigError("csv:" + std::to_string(lineno) + ": expected " +
                              std::to_string(table.columns.size() + 2) + " cells, got " +
                              std::to_string(cells.size()));
        table.sweep_values.push_back(std::stod(cells.front()));
        for (size_t i = 0; i < table.columns.size(); ++i) {
            const std::string& cell = cells[i + 1];
            if (cell.empty())
                table.columns[i].values.push_back(std::nullopt);
            else
                table.columns[i].values.push_back(std::stod(cell));
        }
        table.row_warnings.push_back(cells.back());
    }
    if (!header_done) throw ConfigError("csv: missing header row");
    return table;
}

SweepTable parse_csv_string(const std::string& text) {
    std::istringstream is(text);
    return parse_csv(is);
}

// --- plotting ---------------------------------------------------------------

namespace {

struct LogSeries {
    std::string label;
    std::vector<std::pair<double, double>> pts; // (log10 x_display, log10 y)
};

struct PlotData {
    AxisInfo axis;
    std::vector<LogSeries> series;
    double x_lo, x_hi, y_lo, y_hi; // decade-aligned log10 bounds
};

PlotData prepare_plot(const SweepTable& table) {
    if (table.sweep_values.size() < 2)
        throw std::invalid_argument("plot: need at least 2 sweep points");
    PlotData pd;
    pd.axis = axis_info(table.sweep_label);

    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    double xmin = ymin, xmax = ymax;
    for (const auto& col : table.columns) {
        LogSeries s;
        s.label = col.label;
        for (size_t i = 0; i < table.sweep_values.size(); ++i) {
            const double x = table.sweep_values[i] * pd.axis.scale;
            if (!(x > 0.0)) continue;
            if (!col.values[i] || !(*col.values[i] > 0.0) || !std::isfinite(*col.values[i]))
                continue;
            const double lx = std::log10(x);
            const double ly = std::log10(*col.values[i]);
            s.pts.emplace_back(lx, ly);
            xmin = std::min(xmin, lx);
            xmax = std::max(xmax, lx);
            ymin = std::min(ymin, ly);
            ymax = std::max(ymax, ly);
        }
        if (s.pts.empty()) {
            std::cerr << "plot: skipping series '" << col.label
                      << "' (no positive finite values)\n";
            continue;
        }
        pd.series.push_back(std::move(s));
    }
    if (pd.series.empty()) throw std::invalid_argument("plot: no series with plottable values");

    pd.x_lo = std::floor(xmin);
    pd.x_hi = std::ceil(xmax);
    pd.y_lo = std::floor(ymin);
    pd.y_hi = std::ceil(ymax);
    if (pd.x_hi == pd.x_lo) pd.x_hi += 1.0;
    if (pd.y_hi == pd.y_lo) pd.y_hi += 1.0;
    return pd;
}

std::string decade_label(double exponent) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "1e%+03d", static_cast<int>(std::lround(exponent)));
    return buf;
}

} // namespace

void emit_plot_svg(const SweepTable& table, std::ostream& out) {
    const PlotData pd = prepare_plot(table);

    const double W = 720, H = 480;
    const double L = 90, R = 190, T = 30, B = 70;
    const double pw = W - L - R, ph = H - T - B;
    auto px = [&](double lx) { return L + pw * (lx - pd.x_lo) / (pd.x_hi - pd.x_lo); };
    auto py = [&](double ly) { return T + ph * (pd.y_hi - ly) / (pd.y_hi - pd.y_lo); };
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b"};

    char buf[256];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

    // gridlines and tick labels at decades
    out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double d = pd.x_lo; d <= pd.x_hi + 0.5; d += 1.0) {
        std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                      px(d), T, px(d), T + ph);
        out << buf;
    }
    for (double d = pd.y_lo; d <= pd.y_hi + 0.5; d += 1.0) {
        std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                      L, py(d), L + pw, py(d));
        out << buf;
    }
    out << "</g>\n";

    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (double d = pd.x_lo; d <= pd.x_hi + 0.5; d += 1.0) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\">%s</text>\n", px(d),
                      T + ph + 18, decade_label(d).c_str());
        out << buf;
    }
    for (double d = pd.y_lo; d <= pd.y_hi + 0.5; d += 1.0) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\">%s</text>\n", L - 8,
                      py(d) + 4, decade_label(d).c_str());
        out << buf;
    }
    // axis captions
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-size=\"14\">%s</text>\n",
                  L + pw / 2, H - 20.0, pd.axis.label.c_str());
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-size=\"14\" "
                  "transform=\"rotate(-90 %.2f %.2f)\">heating rate [1/s]</text>\n",
                  24.0, T + ph / 2, 24.0, T + ph / 2);
    out << buf;
    out << "</g>\n";

    // plot frame
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
                  "stroke=\"black\"/>\n",
                  L, T, pw, ph);
    out << buf;

    // series
    for (size_t si = 0; si < pd.series.size(); ++si) {
        const char* color = palette[si % 6];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        for (const auto& [lx, ly] : pd.series[si].pts) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(lx), py(ly));
            out << buf;
        }
        out << "\"/>\n";
    }

    // legend
    double ly0 = T + 10;
    for (size_t si = 0; si < pd.series.size(); ++si) {
        const char* color = palette[si % 6];
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                      "stroke-width=\"2\"/>\n",
                      L + pw + 14, ly0, L + pw + 40, ly0, color);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" "
                      "font-size=\"12\">%s</text>\n",
                      L + pw + 46, ly0 + 4, pd.series[si].label.c_str());
        out << buf;
        ly0 += 18;
    }
    out << "</svg>\n";
}

void emit_plot_ascii(const SweepTable& table, std::ostream& out, int width, int height) {
    const PlotData pd = prepare_plot(table);
    if (width < 40) width = 40;
    if (height < 10) height = 10;

    const int left = 9; // room for y labels
    const int pw = width - left - 2;
    const int ph = height - 4;
    std::vector<std::string> canvas(height, std::string(width, ' '));

    auto col_of = [&](double lx) {
        return left + 1 +
               static_cast<int>(std::lround((pw - 1) * (lx - pd.x_lo) / (pd.x_hi - pd.x_lo)));
    };
    auto row_of = [&](double ly) {
        return 1 + static_cast<int>(std::lround((ph - 1) * (pd.y_hi - ly) / (pd.y_hi - pd.y_lo)));
    };

    // frame
    for (int r = 1; r <= ph; ++r) canvas[r][left] = '|';
    for (int ccol = left; ccol <= left + pw; ++ccol) canvas[ph + 1][ccol] = '-';
    canvas[ph + 1][left] = '+';

    // y decade labels
    for (double d = pd.y_lo; d <= pd.y_hi + 0.5; d += 1.0) {
        int r = row_of(d);
        if (r < 1 || r > ph) continue;
        std::string lab = decade_label(d);
        for (size_t i = 0; i < lab.size() && static_cast<int>(i) < left - 1; ++i)
            canvas[r][i + 1] = lab[i];
        canvas[r][left] = '+';
    }
    // x decade labels
    for (double d = pd.x_lo; d <= pd.x_hi + 0.5; d += 1.0) {
        int ccol = col_of(d);
        if (ccol < left || ccol >= width) continue;
        canvas[ph + 1][ccol] = '+';
        std::string lab = decade_label(d);
        int start = ccol - static_cast<int>(lab.size()) / 2;
        if (start < 0) start = 0;
        if (start + static_cast<int>(lab.size()) >= width)
            start = width - static_cast<int>(lab.size()) - 1;
        for (size_t i = 0; i < lab.size(); ++i) canvas[ph + 2][start + i] = lab[i];
    }

    static const char markers[] = {'*', '+', 'o', 'x', '%', '#'};
    for (size_t si = 0; si < pd.series.size(); ++si) {
        const char mk = markers[si % 6];
        for (const auto& [lx, ly] : pd.series[si].pts) {
            int r = row_of(ly), ccol = col_of(lx);
            if (r >= 1 && r <= ph && ccol > left && ccol < width) canvas[r][ccol] = mk;
        }
    }

    for (const auto& row : canvas) {
        std::string trimmed = row;
        while (!trimmed.empty() && trimmed.back() == ' ') trimmed.pop_back();
        out << trimmed << "\n";
    }
    out << "x: " << pd.axis.label << "   y: heating rate [1/s]\n";
    for (size_t si = 0; si < pd.series.size(); ++si)
        out << "  " << markers[si % 6] << " " << pd.series[si].label << "\n";
}

} // namespace proxheat
