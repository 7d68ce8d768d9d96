#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "waypath/mission.hpp"
#include "waypath/wire.hpp"

namespace waypath {

/// WAYPATH_PORT environment variable, else 7878.
std::uint16_t default_port();

/// Connected stream socket with buffered line I/O. Move-only RAII owner.
class LineConn {
public:
    LineConn() = default;
    explicit LineConn(int fd) : fd_(fd) {}
    LineConn(LineConn&& other) noexcept;
    LineConn& operator=(LineConn&& other) noexcept;
    LineConn(const LineConn&) = delete;
    LineConn& operator=(const LineConn&) = delete;
    ~LineConn();

    static LineConn connect_to(const std::string& host, std::uint16_t port,
                               double timeout_s = 5.0);

    bool open() const { return fd_ >= 0; }
    void send_line(const std::string& line);
    /// One complete line without its terminator; nullopt on clean EOF.
    std::optional<std::string> recv_line();
    void close();

private:
    int fd_ = -1;
    std::string buf_;
};

struct SessionReport {
    enum class Outcome { Completed, ClientLost, ProtocolError };
    Outcome outcome = Outcome::ClientLost;
    double theta_deg = 0.0;
    std::vector<WireMessage> received;
    std::vector<std::string> log; // "<t_s> SENT|RECV <line>"
};

const char* session_outcome_name(SessionReport::Outcome outcome);

/// Planner side of the protocol. Accepts one client at a time; a client
/// connecting while a session is active is refused with an ERROR line. On
/// connect the planner callback produces the theta, the server sends the
/// single THETA message and then consumes client status lines until DONE or
/// disconnect, after which it accepts the next connection.
class PlannerServer {
public:
    PlannerServer(std::uint16_t port, std::function<double()> plan_theta);
    ~PlannerServer();

    std::uint16_t port() const { return port_; }

    /// Blocking acceptor loop; max_sessions < 0 means run until stop().
    void run(int max_sessions = -1);
    /// run() on a background thread.
    void start(int max_sessions = -1);
    void request_stop();
    void stop(); // request + join

    std::vector<SessionReport> reports() const;

private:
    void handle_session(LineConn conn);

    int listen_fd_ = -1;
    std::uint16_t port_ = 0;
    std::function<double()> plan_theta_;
    std::atomic<bool> stop_flag_{false};
    std::atomic<bool> session_active_{false};
    std::thread acceptor_;
    std::thread session_;
    mutable std::mutex mutex_;
    std::vector<SessionReport> reports_;
};

struct RobotClientResult {
    bool protocol_ok = false;
    std::string error;
    double theta_received_deg = 0.0;
    std::string theta_line; // THETA line exactly as received
    MissionReport report;
};

/// Executor seam: runs the mission once the theta arrives. The default
/// executor drives the simulator; a hardware adapter would slot in here.
using MissionExecutor =
    std::function<MissionReport(ThetaDeg, const MissionEvents&)>;

RobotClientResult run_robot_client(const std::string& host, std::uint16_t port,
                                   MissionExecutor executor);
RobotClientResult run_robot_client(const std::string& host, std::uint16_t port,
                                   const Scenario& scenario);

} // namespace waypath
