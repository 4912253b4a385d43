#pragma once

#include <string>

#include "json.hpp"
#include "zecap/channel.hpp"
#include "zecap/protocol.hpp"
#include "zecap/root_systems.hpp"

namespace zecap {

// Machine-readable certificate bundle; every claim carries computed values,
// a pass flag and its runtime.
struct ReportBundle {
    std::string target;
    nlohmann::json doc;
    bool pass = false;
};

ReportBundle report_sp(int m);
ReportBundle report_roots();
ReportBundle report_e7();
ReportBundle report_e8();
ReportBundle report_protocol(const std::string& graph_name);  // "sp6" | "e8"
ReportBundle report_capacity(double tol);
ReportBundle report_baseline();
ReportBundle report_properties();
ReportBundle report_all(double tol);

std::string report_text(const ReportBundle& bundle);

// Assembled codes for the two worked instances.
ZeroErrorCode make_sp6_code();
ZeroErrorCode make_e8_code();

// Named graphs for export: sp2/sp4/sp6/sp8, c5, petersen, g2, a<n>/b<n>/c<n>/d<n>,
// e7-rays, e8-rays, e8-model.
Graph graph_by_name(const std::string& name);

// Coordinate ray graphs keep their integer rays in the JSON form.
bool is_ray_graph_name(const std::string& name);
RayGraph ray_graph_by_name(const std::string& name);

// Clique channels of the two worked instances: "sp6" (d=7) and "e8" (d=8).
Channel channel_by_name(const std::string& name);

}  // namespace zecap
