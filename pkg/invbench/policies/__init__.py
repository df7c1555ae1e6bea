"""
基线订货策略
"""

from invbench.policies.base_stock import base_stock_order
from invbench.policies.forecast import forecast
from invbench.policies.rounding import round_half_up
from invbench.policies.safety_stock import inventory_position, order_cap, safety_stock_order
from invbench.policies.scripted import Policy, make_policy, schedule_policy
from invbench.policies.tracking_demand import tracking_demand_order
