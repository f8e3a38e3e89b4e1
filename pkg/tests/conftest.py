from hypothesis import HealthCheck, settings

settings.register_profile(
    "smoothkit",
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("smoothkit")
