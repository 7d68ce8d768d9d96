#include "waypath/net.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace waypath {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void set_recv_timeout(int fd, double seconds) {
    timeval tv{};
    tv.tv_sec = static_cast<long>(seconds);
    tv.tv_usec = static_cast<long>((seconds - tv.tv_sec) * 1e6);
    ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof(tv));
}

std::string log_line(double t_s, const char* dir, std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
        line.pop_back();
    }
    char head[32];
    std::snprintf(head, sizeof(head), "%.3f %s ", t_s, dir);
    return head + line;
}

} // namespace

std::uint16_t default_port() {
    if (const char* env = std::getenv("WAYPATH_PORT")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0 && v <= 65535) return static_cast<std::uint16_t>(v);
    }
    return 7878;
}

LineConn::LineConn(LineConn&& other) noexcept
    : fd_(other.fd_), buf_(std::move(other.buf_)) {
    other.fd_ = -1;
}

LineConn& LineConn::operator=(LineConn&& other) noexcept {
    if (this != &other) {
        close();
        fd_ = other.fd_;
        buf_ = std::move(other.buf_);
        other.fd_ = -1;
    }
    return *this;
}

LineConn::~LineConn() { close(); }

void LineConn::close() {
    if (fd_ >= 0) {
        ::close(fd_);
        fd_ = -1;
    }
}

LineConn LineConn::connect_to(const std::string& host, std::uint16_t port,
                              double timeout_s) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    const std::string service = std::to_string(port);
    if (::getaddrinfo(host.c_str(), service.c_str(), &hints, &res) != 0) {
        raise(Errc::Transport, "cannot resolve host " + host);
    }
    int fd = -1;
    for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(res);
    if (fd < 0) {
        raise(Errc::Transport,
              "cannot connect to " + host + ":" + std::to_string(port));
    }
    set_recv_timeout(fd, timeout_s);
    return LineConn(fd);
}

void LineConn::send_line(const std::string& line) {
    if (fd_ < 0) raise(Errc::Transport, "send on closed connection");
    std::size_t off = 0;
    while (off < line.size()) {
        const ssize_t n = ::send(fd_, line.data() + off, line.size() - off,
                                 MSG_NOSIGNAL);
        if (n <= 0) raise(Errc::Transport, "send failed");
        off += static_cast<std::size_t>(n);
    }
}

std::optional<std::string> LineConn::recv_line() {
    if (fd_ < 0) raise(Errc::Transport, "recv on closed connection");
    for (;;) {
        const std::size_t nl = buf_.find('\n');
        if (nl != std::string::npos) {
            std::string line = buf_.substr(0, nl);
            buf_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
        char chunk[512];
        const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
        if (n == 0) {
            if (!buf_.empty()) {
                // Unterminated trailing data counts as lost, not as a line.
                buf_.clear();
            }
            return std::nullopt;
        }
        if (n < 0) raise(Errc::Transport, "recv failed or timed out");
        buf_.append(chunk, static_cast<std::size_t>(n));
    }
}

const char* session_outcome_name(SessionReport::Outcome outcome) {
    switch (outcome) {
    case SessionReport::Outcome::Completed: return "Completed";
    case SessionReport::Outcome::ClientLost: return "ClientLost";
    case SessionReport::Outcome::ProtocolError: return "ProtocolError";
    }
    return "?";
}

PlannerServer::PlannerServer(std::uint16_t port, std::function<double()> plan_theta)
    : plan_theta_(std::move(plan_theta)) {
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) raise(Errc::Transport, "socket() failed");
    const int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    addr.sin_port = htons(port);
    if (::bind(listen_fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
        ::close(listen_fd_);
        raise(Errc::Transport, "bind failed on port " + std::to_string(port));
    }
    if (::listen(listen_fd_, 8) != 0) {
        ::close(listen_fd_);
        raise(Errc::Transport, "listen failed");
    }
    socklen_t len = sizeof(addr);
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

PlannerServer::~PlannerServer() {
    stop();
    if (session_.joinable()) session_.join();
    if (listen_fd_ >= 0) ::close(listen_fd_);
}

void PlannerServer::run(int max_sessions) {
    int completed = 0;
    while (!stop_flag_ && (max_sessions < 0 || completed < max_sessions)) {
        pollfd pfd{listen_fd_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, 50);
        if (ready <= 0) continue;
        const int fd = ::accept(listen_fd_, nullptr, nullptr);
        if (fd < 0) continue;
        if (session_active_) {
            // One robot at a time.
            LineConn busy(fd);
            try {
                busy.send_line(encode(WireMessage::error("busy")));
            } catch (const Error&) {
            }
            continue;
        }
        if (session_.joinable()) session_.join();
        set_recv_timeout(fd, 30.0);
        session_active_ = true;
        session_ = std::thread([this, fd] { handle_session(LineConn(fd)); });
        ++completed;
    }
    if (session_.joinable()) session_.join();
}

void PlannerServer::start(int max_sessions) {
    acceptor_ = std::thread([this, max_sessions] { run(max_sessions); });
}

void PlannerServer::request_stop() { stop_flag_ = true; }

void PlannerServer::stop() {
    request_stop();
    if (acceptor_.joinable()) acceptor_.join();
}

std::vector<SessionReport> PlannerServer::reports() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return reports_;
}

void PlannerServer::handle_session(LineConn conn) {
    const auto start = Clock::now();
    SessionReport report;
    try {
        const double theta = plan_theta_();
        report.theta_deg = theta;
        const std::string line = encode(WireMessage::theta(theta));
        conn.send_line(line);
        report.log.push_back(log_line(since(start), "SENT", line));

        for (;;) {
            const auto maybe = conn.recv_line();
            if (!maybe) {
                report.outcome = SessionReport::Outcome::ClientLost;
                report.log.push_back(log_line(since(start), "LOST", "connection closed"));
                break;
            }
            report.log.push_back(log_line(since(start), "RECV", *maybe));
            WireMessage msg;
            try {
                msg = decode(*maybe);
            } catch (const Error&) {
                report.outcome = SessionReport::Outcome::ProtocolError;
                try {
                    conn.send_line(encode(WireMessage::error("malformed line")));
                } catch (const Error&) {
                }
                break;
            }
            report.received.push_back(msg);
            if (msg.type == MsgType::Done) {
                report.outcome = SessionReport::Outcome::Completed;
                break;
            }
            if (msg.type == MsgType::Error) {
                report.outcome = SessionReport::Outcome::ClientLost;
                break;
            }
        }
    } catch (const Error& e) {
        report.outcome = SessionReport::Outcome::ClientLost;
        report.log.push_back(log_line(since(start), "LOST", e.what()));
    }
    {
        std::lock_guard<std::mutex> lock(mutex_);
        reports_.push_back(std::move(report));
    }
    session_active_ = false;
}

RobotClientResult run_robot_client(const std::string& host, std::uint16_t port,
                                   MissionExecutor executor) {
    RobotClientResult result;
    LineConn conn = LineConn::connect_to(host, port);

    const auto first = conn.recv_line();
    if (!first) {
        result.error = "server closed before sending theta";
        return result;
    }
    WireMessage msg;
    try {
        msg = decode(*first);
    } catch (const Error& e) {
        result.error = std::string("protocol failure: ") + e.what();
        try {
            conn.send_line(encode(WireMessage::error("bad first message")));
        } catch (const Error&) {
        }
        return result;
    }
    if (msg.type != MsgType::Theta) {
        result.error = "protocol failure: expected THETA first";
        try {
            conn.send_line(encode(WireMessage::error("expected THETA first")));
        } catch (const Error&) {
        }
        return result;
    }
    result.protocol_ok = true;
    result.theta_received_deg = msg.value;
    result.theta_line = *first;

    MissionEvents events;
    events.on_obstacle = [&conn](double range_cm) {
        conn.send_line(encode(WireMessage::range(range_cm)));
    };
    events.on_target = [&conn] {
        conn.send_line(encode(WireMessage::target_found()));
    };

    result.report = executor(ThetaDeg{msg.value}, events);
    if (result.report.outcome == MissionOutcome::Done) {
        conn.send_line(encode(WireMessage::done()));
    } else {
        conn.send_line(encode(WireMessage::error(
            std::string("mission ") + outcome_name(result.report.outcome))));
    }
    return result;
}

RobotClientResult run_robot_client(const std::string& host, std::uint16_t port,
                                   const Scenario& scenario) {
    return run_robot_client(host, port,
                            [&scenario](ThetaDeg theta, const MissionEvents& ev) {
                                return execute_mission(scenario, theta, ev);
                            });
}

} // namespace waypath
