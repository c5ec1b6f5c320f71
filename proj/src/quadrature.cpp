// SPDX-License-Identifier: Apache-2.0
#include "steklov/quadrature.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <memory>
#include <mutex>
#include <string>

#include "steklov/errors.hpp"

namespace steklov::quadrature {
namespace {

void disable_gsl_abort() {
    static std::once_flag once;
    std::call_once(once, [] { gsl_set_error_handler_off(); });
}

struct GlTableDeleter {
    void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};
struct WorkspaceDeleter {
    void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

double trampoline(double x, void* params) {
    return (*static_cast<const std::function<double(double)>*>(params))(x);
}

constexpr std::size_t kMaxIntervals = 2000;

}  // namespace

GaussRule gauss_legendre(int points) { return gauss_legendre(points, -1.0, 1.0); }

GaussRule gauss_legendre(int points, double a, double b) {
    if (points < 1) throw ValidationError("gauss_legendre: need at least one node");
    disable_gsl_abort();
    std::unique_ptr<gsl_integration_glfixed_table, GlTableDeleter> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(points)));
    if (!table) throw Error("gauss_legendre: table allocation failed");

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(points));
    rule.weights.resize(static_cast<std::size_t>(points));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        gsl_integration_glfixed_point(a, b, i, &rule.nodes[i], &rule.weights[i], table.get());
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 double rel_tol) {
    if (a == b) return 0.0;
    disable_gsl_abort();
    std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(
        gsl_integration_workspace_alloc(kMaxIntervals));
    if (!ws) throw Error("integrate: workspace allocation failed");

    gsl_function fn;
    fn.function = &trampoline;
    fn.params = const_cast<std::function<double(double)>*>(&f);

    double result = 0.0;
    double abserr = 0.0;
    const int status = gsl_integration_qag(&fn, a, b, abs_tol, rel_tol, kMaxIntervals,
                                           GSL_INTEG_GAUSS15, ws.get(), &result, &abserr);
    // Roundoff status means the estimate is already at machine precision.
    if (status != GSL_SUCCESS && status != GSL_EROUND) {
        throw Error(std::string("integrate: ") + gsl_strerror(status));
    }
    return result;
}

}  // namespace steklov::quadrature
