# Raíz del proyecto en sys.path para que pytest resuelva `settings`, `core`, `utils` y `render`.
