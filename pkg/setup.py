# setup.py
from setuptools import setup, find_namespace_packages

setup(
    name="modal_workbench",
    version="1.0.0",
    packages=find_namespace_packages(include=["src", "src.*"]),
    py_modules=["config", "run"],
    install_requires=[
        "python-dotenv>=1.0.0",
        "pydantic>=1.10.11,<2",
        "numpy>=1.25.1",
        "regex>=2023.6.3",
        "colorama>=0.4.6",
        "lark>=1.1.7",
    ],
    extras_require={
        "test": ["pytest>=7.4.0", "hypothesis>=6.82.0"],
    },
    entry_points={
        "console_scripts": [
            "modal-workbench=src.interfaces.cli.cli_app:main",
        ],
    },
    description="Bancada de lógica modal: verificação de modelos, condições de frame de primeira ordem, "
                "abstração por quociente, codificação de grade e busca limitada de modelos",
    keywords="lógica modal, kripke, model checking, grade, clean architecture",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
    ],
    python_requires=">=3.9",
)
