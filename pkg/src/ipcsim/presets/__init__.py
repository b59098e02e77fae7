"""Scene files shipped with the package."""
from importlib import resources
from pathlib import Path

CLOTH = "hanging_cloth"
BEAM = "stiff_beam"
PAIR = "stiff_soft_pair"
PAIR_ABD = "stiff_soft_pair_abd"
FIXTURE = "mas_fixture"


def names():
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".toml"))


def path(name):
    """Filesystem path of a preset given its bare name (or the path itself if it exists)."""
    p = Path(name)
    if p.suffix == ".toml" and p.exists():
        return p
    candidate = Path(str(resources.files(__name__).joinpath(f"{p.stem}.toml")))
    if not candidate.exists():
        raise FileNotFoundError(f"no scene file or preset named {name!r} (presets: {', '.join(names())})")
    return candidate


def load(name):
    from ..scene import load_scene

    return load_scene(path(name))
