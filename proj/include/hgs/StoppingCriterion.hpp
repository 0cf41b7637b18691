#ifndef HGS_STOPPINGCRITERION_HPP
#define HGS_STOPPINGCRITERION_HPP

#include <cstddef>
#include <string>

namespace hgs
{
struct SearchProgress
{
    std::size_t iteration = 0;  // completed iterations
    double elapsed = 0.0;       // seconds since the run started
    std::size_t sinceImprovement = 0;
};

class StoppingCriterion
{
public:
    enum class Kind
    {
        MaxRuntime,
        MaxIterations,
        NoImprovement
    };

    /// Throws std::invalid_argument on a negative or non-finite limit.
    static StoppingCriterion maxRuntime(double seconds);
    static StoppingCriterion maxIterations(std::size_t count);
    static StoppingCriterion noImprovement(std::size_t count);

    [[nodiscard]] bool shouldStop(SearchProgress const &progress) const;

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] double limit() const { return limit_; }
    [[nodiscard]] std::string describe() const;

private:
    Kind kind_;
    double limit_;

    StoppingCriterion(Kind kind, double limit) : kind_(kind), limit_(limit) {}
};
}  // namespace hgs

#endif  // HGS_STOPPINGCRITERION_HPP
