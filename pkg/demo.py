import invbench
from invbench.harness import scenario
from invbench.objects import RunConfig

# 读取已注册的场景
spec = scenario("const-uni")

# 求解集中式最优订单矩阵
result = invbench.solve(spec, time_limit=60)
print(result.objective, result.status)

# 运行安全库存基线并查看相对差距
report = invbench.run_experiment(RunConfig(scenario="const-uni", agent=invbench.AgentKind.SAFETY_STOCK))
print(report.mean, report.gap)

# 逐周期驱动环境
env = invbench.reset(spec)
for t in range(1, spec.horizon + 1):
    for m in range(spec.num_stages):
        obs = invbench.observe(env, m)
        invbench.submit_order(env, m, invbench.base_stock_order(obs, spec.stages[m]))
    invbench.advance_period(env)
print(invbench.total_reward(env))
