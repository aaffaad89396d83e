"""
`tork.config` defines the package defaults.

Override any of them by subclassing `DefaultConfig` and passing the subclass to
`load_config`; only the attributes you set are replaced.
"""

import os

from .exceptions import RejectedInputError



class DefaultConfig:
    mask_cap = 63
    exhaustive_cap = 5
    hochster_cap = 12
    verify_differentials = True
    jobs_env = "TORK_JOBS"


def clean_class_dict(cls) -> dict:
    return {k:v for k,v in cls.__dict__.items() if not k.startswith("__")}


def load_config(overrides:type|None=None) -> dict:
    """Returns the merged configuration dictionary.

    Args:
        overrides (type, optional): a class whose public attributes replace the defaults
    """
    config = clean_class_dict(DefaultConfig)
    if overrides is not None:
        config.update(clean_class_dict(overrides))
    return config


CONFIG = load_config()


def resolve_jobs(flag:int|None=None) -> int:
    """Worker count: the flag wins, then `TORK_JOBS`, then the number of CPUs."""
    if flag is not None:
        jobs = flag
    elif (env := os.environ.get(CONFIG["jobs_env"])):
        try:
            jobs = int(env)
        except ValueError:
            raise RejectedInputError(f"`{CONFIG['jobs_env']}` must be an integer, got `{env}`") from None
    else:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise RejectedInputError(f"worker count must be at least 1, got {jobs}")
    return jobs
